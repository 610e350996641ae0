#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"

namespace subspace {

enum class ClusterModel { UniformBox, Gaussian };

// Full parameterization of a synthetic dataset with hidden subspace
// clusters. Validated by generate(); violations throw InvalidSpec naming
// the offending field.
struct GeneratorSpec {
  std::size_t n_clustered = 0;  // objects inside clusters, >= k
  std::size_t n_noise = 0;
  std::size_t d = 0;
  std::size_t k = 0;  // clusters, >= 1
  std::size_t dims_min = 2;
  std::size_t dims_max = 2;  // 2 <= dims_min <= dims_max <= d
  std::vector<double> size_weights;  // empty = equal; else k positive weights
  double extent = 0.05;              // half-width along a relevant dim
  std::pair<double, double> value_range{0.0, 1.0};
  ClusterModel model = ClusterModel::UniformBox;
  std::uint64_t seed = 0;
};

// Cluster sizes by largest-remainder apportionment of total over weights;
// remainders tie-break to the lower index. Every share must end up >= 1.
std::vector<std::size_t> apportion_sizes(std::size_t total,
                                         const std::vector<double>& weights);

// Draws data and the hidden ground truth. Per cluster: a subspace of
// uniform size in [dims_min, dims_max], a center that keeps the +-extent
// box inside the value range, and members spread per model on relevant
// dims, uniform elsewhere. Noise objects are uniform everywhere. Rows are
// shuffled once; the ground truth refers to post-shuffle ids and its
// clusters are pairwise object-disjoint.
std::pair<Dataset, Clustering> generate(const GeneratorSpec& spec);

}  // namespace subspace
