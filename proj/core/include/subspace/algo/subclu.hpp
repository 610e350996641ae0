#pragma once

#include <vector>

#include "subspace/algo/params.hpp"
#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"

namespace subspace {

struct SubcluResult {
  Clustering clustering;
  // For each output cluster, the candidate object set the final DBSCAN pass
  // ran on; every cluster re-validates as a run_dbscan cluster of its
  // subspace over this set.
  std::vector<std::vector<std::size_t>> candidate_sets;
};

// Bottom-up subspace DBSCAN. Level 1 clusters every single dimension over
// all objects. A level k+1 subspace is joined from two level-k subspaces
// sharing k-1 dimensions, pruned unless every k-subset produced clusters,
// and clustered by re-running DBSCAN inside each cluster of the k-subspace
// that covers the fewest objects (ties: lexicographically first subspace).
// Output holds one cluster per (subspace, DBSCAN cluster) at every level,
// sorted by (|S| ascending, subspace lexicographic, discovery order).
SubcluResult run_subclu_detailed(const Dataset& data, const SubcluParams& params);

Clustering run_subclu(const Dataset& data, const SubcluParams& params);

}  // namespace subspace
