#include "subspace/algo/mineclus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "subspace/errors.hpp"
#include "subspace/rng.hpp"

namespace subspace {

namespace detail {

namespace {

using Itemset = std::vector<std::size_t>;

bool contains_all(const std::vector<bool>& transaction, const Itemset& items) {
  for (std::size_t j : items)
    if (!transaction[j]) return false;
  return true;
}

}  // namespace

BoxCandidate mineclus_mine_at_seed(const Dataset& data,
                                   const std::vector<std::size_t>& remaining,
                                   std::size_t seed_object, double beta, double w,
                                   std::size_t min_support) {
  const std::size_t d = data.dims();

  // Transaction per remaining object: the dimensions where it stays within
  // w of the seed.
  std::vector<std::vector<bool>> transactions;
  transactions.reserve(remaining.size());
  for (std::size_t q : remaining) {
    std::vector<bool> t(d, false);
    for (std::size_t j = 0; j < d; ++j)
      t[j] = std::abs(data.value(q, j) - data.value(seed_object, j)) <= w;
    transactions.push_back(std::move(t));
  }

  BoxCandidate best;
  auto consider = [&](const Itemset& items, std::size_t support) {
    const double quality = quality_log_mu(support, items.size(), beta);
    if (!best.valid || quality > best.quality) {
      best.valid = true;
      best.dims = items;
      best.quality = quality;
      best.objects.clear();  // filled once at the end
    }
  };

  // Level 1.
  std::map<Itemset, std::size_t> current;  // itemset -> support
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t support = 0;
    for (const auto& t : transactions)
      if (t[j]) ++support;
    if (support >= min_support) {
      current.emplace(Itemset{j}, support);
      consider({j}, support);
    }
  }

  // Levelwise join and prune.
  while (!current.empty()) {
    std::map<Itemset, std::size_t> next;
    for (auto a = current.begin(); a != current.end(); ++a) {
      for (auto b = std::next(a); b != current.end(); ++b) {
        const Itemset& ia = a->first;
        const Itemset& ib = b->first;
        if (!std::equal(ia.begin(), ia.end() - 1, ib.begin(), ib.end() - 1)) break;
        if (ib.back() <= ia.back()) continue;

        Itemset candidate(ia);
        candidate.push_back(ib.back());

        bool all_subsets_frequent = true;
        for (std::size_t skip = 0; skip < candidate.size() && all_subsets_frequent;
             ++skip) {
          Itemset sub;
          for (std::size_t q = 0; q < candidate.size(); ++q)
            if (q != skip) sub.push_back(candidate[q]);
          if (!current.count(sub)) all_subsets_frequent = false;
        }
        if (!all_subsets_frequent) continue;

        std::size_t support = 0;
        for (const auto& t : transactions)
          if (contains_all(t, candidate)) ++support;
        if (support >= min_support) {
          consider(candidate, support);
          next.emplace(std::move(candidate), support);
        }
      }
    }
    current = std::move(next);
  }

  if (best.valid) {
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (contains_all(transactions[i], best.dims)) best.objects.push_back(remaining[i]);
  }
  return best;
}

}  // namespace detail

Clustering run_mineclus(const Dataset& data, const MineclusParams& params) {
  const std::size_t n = data.size();
  if (n == 0) throw InsufficientData("mineclus needs at least one object");

  Rng rng(params.seed);
  const auto min_support =
      static_cast<std::size_t>(std::ceil(params.alpha * static_cast<double>(n)));
  const auto outer = static_cast<std::size_t>(std::ceil(2.0 / params.alpha));

  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  std::vector<SubspaceCluster> clusters;
  while (clusters.size() < params.max_clusters && !remaining.empty()) {
    detail::BoxCandidate best;
    for (std::size_t t = 0; t < outer; ++t) {
      const std::size_t seed_object = remaining[rng.index(remaining.size())];
      auto candidate = detail::mineclus_mine_at_seed(data, remaining, seed_object,
                                                     params.beta, params.w, min_support);
      if (candidate.valid && (!best.valid || candidate.quality > best.quality))
        best = std::move(candidate);
    }
    if (!best.valid) break;

    std::vector<std::size_t> peeled;
    std::set_difference(remaining.begin(), remaining.end(), best.objects.begin(),
                        best.objects.end(), std::back_inserter(peeled));
    remaining = std::move(peeled);
    clusters.emplace_back(std::move(best.objects), std::move(best.dims));
  }
  return Clustering(std::move(clusters), n, data.dims());
}

}  // namespace subspace
