#pragma once

#include <vector>

#include "subspace/algo/params.hpp"
#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"

namespace subspace {

struct ProclusResult {
  Clustering clustering;
  // Final medoids and their dimension sets (k entries, 2..d dims each,
  // k*l slots in total), before empty clusters are dropped.
  std::vector<std::size_t> medoids;
  std::vector<std::vector<std::size_t>> medoid_dims;
  // Objective of the initial state and of every accepted improvement; the
  // hill climb returns the state with the last (smallest) value.
  std::vector<double> accepted_objectives;
};

// Projected clustering around k medoids with l relevant dimensions on
// average. Three phases: greedy selection of well-scattered candidate
// medoids from a random sample, hill climbing that swaps the medoid of the
// smallest cluster while the objective stagnates, and a refinement pass
// that recomputes dimensions from the final clusters and drops outliers.
// All distances are Manhattan segmental. Throws InsufficientData when
// n < k, InvalidParams when l > d.
ProclusResult run_proclus_detailed(const Dataset& data, const ProclusParams& params);

Clustering run_proclus(const Dataset& data, const ProclusParams& params);

}  // namespace subspace
