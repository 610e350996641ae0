#pragma once

#include <vector>

#include "subspace/dataset.hpp"

namespace subspace {

// Density-based clustering of the candidate objects using Euclidean
// distance restricted to the given dimensions. A point is core iff its
// closed eps-neighborhood (itself included) holds at least min_pts
// candidates. Clusters are maximal density-connected sets of core points
// plus their border points; a border point reachable from several clusters
// goes to the cluster discovered first under ascending-object-id iteration.
// Noise is omitted. Clusters are returned in discovery order, each sorted.
std::vector<std::vector<std::size_t>> run_dbscan(
    const Dataset& data, const std::vector<std::size_t>& subspace,
    const std::vector<std::size_t>& candidates, double eps, std::size_t min_pts);

}  // namespace subspace
