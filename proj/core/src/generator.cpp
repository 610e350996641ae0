#include "subspace/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "subspace/errors.hpp"
#include "subspace/rng.hpp"

namespace subspace {

namespace {

void validate(const GeneratorSpec& spec) {
  auto fail = [](const std::string& message) { throw InvalidSpec(message); };
  if (spec.k < 1) fail("k must be >= 1");
  if (spec.n_clustered < spec.k) fail("n_clustered must be >= k");
  if (spec.d < 1) fail("d must be >= 1");
  if (spec.dims_min < 2) fail("dims_min must be >= 2");
  if (spec.dims_min > spec.dims_max) fail("dims_min must be <= dims_max");
  if (spec.dims_max > spec.d) fail("dims_max must be <= d");
  const auto [lo, hi] = spec.value_range;
  if (!(lo < hi)) fail("value_range must have lo < hi");
  if (!(spec.extent > 0.0)) fail("extent must be > 0");
  if (!(spec.extent < 0.5 * (hi - lo))) fail("extent must be < half the value_range width");
  if (!spec.size_weights.empty()) {
    if (spec.size_weights.size() != spec.k) fail("size_weights must have k entries");
    for (double w : spec.size_weights)
      if (!(w > 0.0) || !std::isfinite(w)) fail("size_weights must be positive finite");
  }
}

}  // namespace

std::vector<std::size_t> apportion_sizes(std::size_t total,
                                         const std::vector<double>& weights) {
  const double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  const std::size_t k = weights.size();
  std::vector<std::size_t> sizes(k);
  std::vector<std::pair<double, std::size_t>> remainders(k);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double quota = static_cast<double>(total) * weights[i] / weight_sum;
    sizes[i] = static_cast<std::size_t>(std::floor(quota));
    assigned += sizes[i];
    remainders[i] = {quota - std::floor(quota), i};
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) sizes[remainders[i % k].second]++;
  return sizes;
}

std::pair<Dataset, Clustering> generate(const GeneratorSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);

  const auto [lo, hi] = spec.value_range;
  const std::vector<double> weights =
      spec.size_weights.empty() ? std::vector<double>(spec.k, 1.0) : spec.size_weights;
  const auto sizes = apportion_sizes(spec.n_clustered, weights);
  for (std::size_t i = 0; i < spec.k; ++i)
    if (sizes[i] == 0)
      throw InvalidSpec("size_weights leave cluster " + std::to_string(i) + " empty");

  // Hidden structure: subspace and center per cluster.
  std::vector<std::vector<std::size_t>> subspaces(spec.k);
  std::vector<std::vector<double>> centers(spec.k);
  for (std::size_t i = 0; i < spec.k; ++i) {
    const std::size_t dim_count =
        spec.dims_min + rng.index(spec.dims_max - spec.dims_min + 1);
    subspaces[i] = rng.sample(spec.d, dim_count);
    std::sort(subspaces[i].begin(), subspaces[i].end());
    centers[i].reserve(dim_count);
    for (std::size_t j = 0; j < dim_count; ++j)
      centers[i].push_back(rng.uniform(lo + spec.extent, hi - spec.extent));
  }

  const std::size_t n = spec.n_clustered + spec.n_noise;
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  std::vector<std::size_t> membership;  // pre-shuffle row -> cluster, k = noise
  membership.reserve(n);

  for (std::size_t i = 0; i < spec.k; ++i) {
    std::vector<bool> relevant(spec.d, false);
    std::vector<double> center_of(spec.d, 0.0);
    for (std::size_t p = 0; p < subspaces[i].size(); ++p) {
      relevant[subspaces[i][p]] = true;
      center_of[subspaces[i][p]] = centers[i][p];
    }
    for (std::size_t o = 0; o < sizes[i]; ++o) {
      std::vector<double> row(spec.d);
      for (std::size_t j = 0; j < spec.d; ++j) {
        if (!relevant[j]) {
          row[j] = rng.uniform(lo, hi);
        } else if (spec.model == ClusterModel::UniformBox) {
          row[j] = rng.uniform(center_of[j] - spec.extent, center_of[j] + spec.extent);
        } else {
          // Truncated gaussian: sigma = extent/2, redrawn until inside the
          // +-extent box.
          double v;
          do {
            v = rng.normal(center_of[j], spec.extent / 2.0);
          } while (std::abs(v - center_of[j]) > spec.extent);
          row[j] = v;
        }
      }
      rows.push_back(std::move(row));
      membership.push_back(i);
    }
  }
  for (std::size_t o = 0; o < spec.n_noise; ++o) {
    std::vector<double> row(spec.d);
    for (std::size_t j = 0; j < spec.d; ++j) row[j] = rng.uniform(lo, hi);
    rows.push_back(std::move(row));
    membership.push_back(spec.k);
  }

  // One shuffle; ground truth follows the rows to their new positions.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::vector<double>> shuffled(n);
  std::vector<std::vector<std::size_t>> cluster_objects(spec.k);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t src = order[pos];
    shuffled[pos] = std::move(rows[src]);
    if (membership[src] < spec.k) cluster_objects[membership[src]].push_back(pos);
  }

  std::vector<std::string> names;
  names.reserve(spec.d);
  for (std::size_t j = 0; j < spec.d; ++j) names.push_back("dim_" + std::to_string(j));

  std::vector<SubspaceCluster> truth;
  truth.reserve(spec.k);
  for (std::size_t i = 0; i < spec.k; ++i)
    truth.emplace_back(std::move(cluster_objects[i]), subspaces[i]);

  return {Dataset(std::move(shuffled), std::move(names), "generated"),
          Clustering(std::move(truth), n, spec.d)};
}

}  // namespace subspace
