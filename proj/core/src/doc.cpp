#include "subspace/algo/doc.hpp"

#include <algorithm>
#include <cmath>

#include "subspace/errors.hpp"

namespace subspace {

namespace detail {

double quality_log_mu(std::size_t support, std::size_t dim_count, double beta) {
  return std::log(static_cast<double>(support)) +
         static_cast<double>(dim_count) * std::log(1.0 / beta);
}

std::size_t discriminating_set_size(std::size_t d, double beta) {
  const double r = std::ceil(std::log(2.0 * static_cast<double>(d)) /
                             std::log(1.0 / (2.0 * beta)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(r));
}

std::size_t inner_trials(double alpha, std::size_t r) {
  const double m = std::ceil(std::pow(2.0 / alpha, static_cast<double>(r)) *
                             std::log(4.0));
  const double cap = static_cast<double>(std::size_t{1} << 30);
  return static_cast<std::size_t>(std::min(std::max(m, 1.0), cap));
}

namespace {

// Dimensions in which every discriminating point agrees with the seed.
std::vector<std::size_t> vote_dims(const Dataset& data, std::size_t seed_object,
                                   const std::vector<std::size_t>& witnesses,
                                   double w) {
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < data.dims(); ++j) {
    bool agree = true;
    for (std::size_t x : witnesses) {
      if (std::abs(data.value(x, j) - data.value(seed_object, j)) > w) {
        agree = false;
        break;
      }
    }
    if (agree) dims.push_back(j);
  }
  return dims;
}

std::vector<std::size_t> box_support(const Dataset& data, std::size_t seed_object,
                                     const std::vector<std::size_t>& dims, double w,
                                     const std::vector<std::size_t>& remaining) {
  std::vector<std::size_t> objects;
  for (std::size_t q : remaining) {
    bool inside = true;
    for (std::size_t j : dims) {
      if (std::abs(data.value(q, j) - data.value(seed_object, j)) > w) {
        inside = false;
        break;
      }
    }
    if (inside) objects.push_back(q);
  }
  return objects;
}

}  // namespace

BoxCandidate doc_mine_at_seed(const Dataset& data,
                              const std::vector<std::size_t>& remaining,
                              std::size_t seed_object, const DocParams& params,
                              std::size_t min_support, Rng& rng) {
  const std::size_t r = discriminating_set_size(data.dims(), params.beta);
  const std::size_t m = inner_trials(params.alpha, r);

  BoxCandidate best;
  std::vector<std::size_t> witnesses(r);
  for (std::size_t trial = 0; trial < m; ++trial) {
    for (std::size_t i = 0; i < r; ++i)
      witnesses[i] = remaining[rng.index(remaining.size())];
    auto dims = vote_dims(data, seed_object, witnesses, params.w);
    if (dims.empty()) continue;
    auto objects = box_support(data, seed_object, dims, params.w, remaining);
    if (objects.size() < min_support) continue;
    const double quality = quality_log_mu(objects.size(), dims.size(), params.beta);
    if (!best.valid || quality > best.quality) {
      best.valid = true;
      best.objects = std::move(objects);
      best.dims = std::move(dims);
      best.quality = quality;
    }
  }
  return best;
}

}  // namespace detail

namespace {

std::vector<std::size_t> remove_sorted(const std::vector<std::size_t>& from,
                                       const std::vector<std::size_t>& victims) {
  std::vector<std::size_t> out;
  std::set_difference(from.begin(), from.end(), victims.begin(), victims.end(),
                      std::back_inserter(out));
  return out;
}

std::size_t support_bound(double alpha, std::size_t n) {
  return static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n)));
}

std::size_t seed_trials(double alpha) {
  return static_cast<std::size_t>(std::ceil(2.0 / alpha));
}

}  // namespace

Clustering run_doc(const Dataset& data, const DocParams& params) {
  const std::size_t n = data.size();
  if (n == 0) throw InsufficientData("doc needs at least one object");

  Rng rng(params.seed);
  const std::size_t min_support = support_bound(params.alpha, n);
  const std::size_t outer = seed_trials(params.alpha);

  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  std::vector<SubspaceCluster> clusters;
  while (clusters.size() < params.max_clusters && !remaining.empty()) {
    detail::BoxCandidate best;
    for (std::size_t t = 0; t < outer; ++t) {
      const std::size_t seed_object = remaining[rng.index(remaining.size())];
      auto candidate =
          detail::doc_mine_at_seed(data, remaining, seed_object, params, min_support, rng);
      if (candidate.valid && (!best.valid || candidate.quality > best.quality))
        best = std::move(candidate);
    }
    if (!best.valid) break;
    remaining = remove_sorted(remaining, best.objects);
    clusters.emplace_back(std::move(best.objects), std::move(best.dims));
  }
  return Clustering(std::move(clusters), n, data.dims());
}

Clustering run_fastdoc(const Dataset& data, const FastDocParams& params) {
  const std::size_t n = data.size();
  if (n == 0) throw InsufficientData("fastdoc needs at least one object");

  const DocParams& base = params.base;
  Rng rng(base.seed);
  const std::size_t min_support = support_bound(base.alpha, n);
  const std::size_t outer = seed_trials(base.alpha);
  const std::size_t r = detail::discriminating_set_size(data.dims(), base.beta);
  const std::size_t m = detail::inner_trials(base.alpha, r);
  const std::size_t dim_target = std::min(params.d0, data.dims());

  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  std::vector<SubspaceCluster> clusters;
  std::vector<std::size_t> witnesses(r);
  while (clusters.size() < params.base.max_clusters && !remaining.empty()) {
    std::vector<std::size_t> best_dims;
    std::size_t best_seed = 0;
    bool done = false;
    for (std::size_t t = 0; t < outer && !done; ++t) {
      const std::size_t seed_object = remaining[rng.index(remaining.size())];
      for (std::size_t trial = 0; trial < m; ++trial) {
        for (std::size_t i = 0; i < r; ++i)
          witnesses[i] = remaining[rng.index(remaining.size())];
        auto dims = detail::vote_dims(data, seed_object, witnesses, base.w);
        if (dims.size() > best_dims.size()) {
          best_dims = std::move(dims);
          best_seed = seed_object;
        }
        if (best_dims.size() >= dim_target) {  // cannot usefully be beaten
          done = true;
          break;
        }
      }
    }
    if (best_dims.empty()) break;
    auto objects = detail::box_support(data, best_seed, best_dims, base.w, remaining);
    if (objects.size() < min_support) break;
    remaining = remove_sorted(remaining, objects);
    clusters.emplace_back(std::move(objects), std::move(best_dims));
  }
  return Clustering(std::move(clusters), n, data.dims());
}

}  // namespace subspace
