#include "subspace/algo/subclu.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "subspace/algo/dbscan.hpp"
#include "subspace/errors.hpp"

namespace subspace {

namespace {

using Subspace = std::vector<std::size_t>;
struct SubspaceClusters {
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::vector<std::size_t>> candidates;  // aligned with clusters
};
using Level = std::map<Subspace, SubspaceClusters>;

std::size_t covered_objects(const SubspaceClusters& sc) {
  std::size_t total = 0;
  for (const auto& c : sc.clusters) total += c.size();
  return total;
}

}  // namespace

SubcluResult run_subclu_detailed(const Dataset& data, const SubcluParams& params) {
  const std::size_t n = data.size();
  const std::size_t d = data.dims();
  if (n == 0) throw InsufficientData("subclu needs at least one object");

  std::vector<std::size_t> all_objects(n);
  std::iota(all_objects.begin(), all_objects.end(), 0);

  std::vector<SubspaceCluster> out_clusters;
  std::vector<std::vector<std::size_t>> out_candidates;

  auto emit = [&](const Level& level) {
    for (const auto& [dims, sc] : level) {
      for (std::size_t c = 0; c < sc.clusters.size(); ++c) {
        out_clusters.emplace_back(sc.clusters[c], dims);
        out_candidates.push_back(sc.candidates[c]);
      }
    }
  };

  Level current;
  for (std::size_t j = 0; j < d; ++j) {
    auto clusters = run_dbscan(data, {j}, all_objects, params.eps, params.min_pts);
    if (clusters.empty()) continue;
    SubspaceClusters sc;
    sc.candidates.assign(clusters.size(), all_objects);
    sc.clusters = std::move(clusters);
    current.emplace(Subspace{j}, std::move(sc));
  }
  emit(current);

  while (!current.empty()) {
    Level next;
    for (auto a = current.begin(); a != current.end(); ++a) {
      for (auto b = std::next(a); b != current.end(); ++b) {
        const Subspace& sa = a->first;
        const Subspace& sb = b->first;
        if (!std::equal(sa.begin(), sa.end() - 1, sb.begin(), sb.end() - 1)) break;
        if (sb.back() <= sa.back()) continue;

        Subspace candidate(sa);
        candidate.push_back(sb.back());

        bool all_subsets_clustered = true;
        for (std::size_t skip = 0; skip < candidate.size() && all_subsets_clustered;
             ++skip) {
          Subspace sub;
          for (std::size_t q = 0; q < candidate.size(); ++q)
            if (q != skip) sub.push_back(candidate[q]);
          if (!current.count(sub)) all_subsets_clustered = false;
        }
        if (!all_subsets_clustered) continue;

        // The parent subspace whose clusters cover the fewest objects;
        // subspace lexicographic order breaks ties. Dropping the largest
        // dimension first visits the subsets in ascending lex order, so a
        // strict '<' keeps the lexicographically first.
        const SubspaceClusters* best = nullptr;
        std::size_t best_covered = 0;
        for (std::size_t skip = candidate.size(); skip-- > 0;) {
          Subspace sub;
          for (std::size_t q = 0; q < candidate.size(); ++q)
            if (q != skip) sub.push_back(candidate[q]);
          const auto& sc = current.at(sub);
          const std::size_t covered = covered_objects(sc);
          if (!best || covered < best_covered) {
            best = &sc;
            best_covered = covered;
          }
        }

        SubspaceClusters result;
        for (const auto& parent_cluster : best->clusters) {
          auto refined = run_dbscan(data, candidate, parent_cluster, params.eps,
                                    params.min_pts);
          for (auto& cluster : refined) {
            result.clusters.push_back(std::move(cluster));
            result.candidates.push_back(parent_cluster);
          }
        }
        if (!result.clusters.empty()) next.emplace(std::move(candidate), std::move(result));
      }
    }
    emit(next);
    current = std::move(next);
  }

  return SubcluResult{Clustering(std::move(out_clusters), n, d),
                      std::move(out_candidates)};
}

Clustering run_subclu(const Dataset& data, const SubcluParams& params) {
  return run_subclu_detailed(data, params).clustering;
}

}  // namespace subspace
