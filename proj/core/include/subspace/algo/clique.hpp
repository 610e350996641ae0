#pragma once

#include <vector>

#include "subspace/algo/params.hpp"
#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"

namespace subspace {

// A dense grid cell in one subspace: interval indices aligned with the
// sorted dimension list, plus the objects it contains.
struct DenseUnit {
  std::vector<std::size_t> dims;     // sorted
  std::vector<int> cells;            // interval index per dim in dims
  std::vector<std::size_t> objects;  // sorted

  bool operator==(const DenseUnit&) const = default;
};

struct CliqueResult {
  Clustering clustering;
  std::vector<DenseUnit> dense_units;  // all levels, in output order
};

// Interval index of a value under the equal-width partition of [lo, hi]
// into xi intervals. A value on an interior boundary belongs to the right
// interval, the maximum to the last one; a zero-width dimension forms a
// single interval (index 0).
int grid_interval(double value, double lo, double hi, int xi);

// Bottom-up dense-unit enumeration: 1-dim dense units first, level k
// candidates joined from level k-1 units sharing k-2 dimensions and pruned
// unless every (k-1)-dim projection is dense. Within each subspace, units
// sharing a (|S|-1)-face form connected components; each component becomes
// one cluster. Output is sorted by (|S| ascending, subspace lexicographic,
// component discovery order).
CliqueResult run_clique_detailed(const Dataset& data, const CliqueParams& params);

Clustering run_clique(const Dataset& data, const CliqueParams& params);

}  // namespace subspace
