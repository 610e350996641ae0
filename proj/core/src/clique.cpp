#include "subspace/algo/clique.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "subspace/errors.hpp"

namespace subspace {

namespace {

// A unit key: (dimension, interval) pairs sorted by dimension.
using UnitKey = std::vector<std::pair<std::size_t, int>>;
using Level = std::map<UnitKey, std::vector<std::size_t>>;  // key -> objects

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

int grid_interval(double value, double lo, double hi, int xi) {
  if (!(hi > lo)) return 0;  // zero-width dimension: single interval
  const double scaled = (value - lo) / (hi - lo) * xi;
  int idx = static_cast<int>(std::floor(scaled));
  if (idx < 0) idx = 0;
  if (idx >= xi) idx = xi - 1;  // the global maximum joins the last interval
  return idx;
}

CliqueResult run_clique_detailed(const Dataset& data, const CliqueParams& params) {
  const std::size_t n = data.size();
  const std::size_t d = data.dims();
  if (n == 0) throw InsufficientData("clique needs at least one object");

  const auto threshold = static_cast<std::size_t>(
      std::ceil(params.tau * static_cast<double>(n)));

  // Interval index of every object in every dimension.
  std::vector<double> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = hi[j] = data.value(0, j);
    for (std::size_t i = 1; i < n; ++i) {
      lo[j] = std::min(lo[j], data.value(i, j));
      hi[j] = std::max(hi[j], data.value(i, j));
    }
  }
  std::vector<std::vector<int>> cell_of(n, std::vector<int>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      cell_of[i][j] = grid_interval(data.value(i, j), lo[j], hi[j], params.xi);

  // Level 1: dense intervals per dimension.
  Level current;
  for (std::size_t j = 0; j < d; ++j) {
    std::map<int, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < n; ++i) buckets[cell_of[i][j]].push_back(i);
    for (auto& [cell, objects] : buckets)
      if (objects.size() >= threshold)
        current.emplace(UnitKey{{j, cell}}, std::move(objects));
  }

  std::vector<DenseUnit> all_units;
  std::vector<SubspaceCluster> clusters;

  auto emit_level = [&](const Level& level) {
    // Regroup the level's units by subspace; within one subspace the level
    // map already yields cells in lexicographic order.
    struct SubspaceUnits {
      std::vector<std::vector<int>> cells;
      std::vector<const std::vector<std::size_t>*> objects;
    };
    std::map<std::vector<std::size_t>, SubspaceUnits> by_subspace;
    for (const auto& [key, objects] : level) {
      std::vector<std::size_t> dims;
      std::vector<int> cells;
      for (const auto& [dim, cell] : key) {
        dims.push_back(dim);
        cells.push_back(cell);
      }
      auto& group = by_subspace[std::move(dims)];
      group.cells.push_back(std::move(cells));
      group.objects.push_back(&objects);
    }

    for (const auto& [dims, group] : by_subspace) {
      std::map<std::vector<int>, std::size_t> by_cells;
      for (std::size_t u = 0; u < group.cells.size(); ++u) {
        by_cells.emplace(group.cells[u], u);
        all_units.push_back(DenseUnit{dims, group.cells[u], *group.objects[u]});
      }

      // Connected components over shared (|S|-1)-faces: interval indices
      // differing by exactly 1 in exactly one dimension.
      std::vector<bool> visited(group.cells.size(), false);
      for (std::size_t start = 0; start < group.cells.size(); ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        std::vector<std::size_t> objects;
        std::deque<std::size_t> frontier{start};
        while (!frontier.empty()) {
          const std::size_t u = frontier.front();
          frontier.pop_front();
          std::vector<std::size_t> merged;
          std::set_union(objects.begin(), objects.end(), group.objects[u]->begin(),
                         group.objects[u]->end(), std::back_inserter(merged));
          objects = std::move(merged);
          for (std::size_t p = 0; p < group.cells[u].size(); ++p) {
            for (int delta : {-1, +1}) {
              std::vector<int> probe(group.cells[u]);
              probe[p] += delta;
              auto hit = by_cells.find(probe);
              if (hit == by_cells.end() || visited[hit->second]) continue;
              visited[hit->second] = true;
              frontier.push_back(hit->second);
            }
          }
        }
        clusters.emplace_back(std::move(objects), dims);
      }
    }
  };

  emit_level(current);

  // Levelwise join and prune.
  while (!current.empty()) {
    Level next;
    for (auto a = current.begin(); a != current.end(); ++a) {
      for (auto b = std::next(a); b != current.end(); ++b) {
        const UnitKey& ka = a->first;
        const UnitKey& kb = b->first;
        // Join requires an equal prefix and a strictly larger final
        // dimension on the right side.
        if (!std::equal(ka.begin(), ka.end() - 1, kb.begin(), kb.end() - 1)) break;
        if (kb.back().first <= ka.back().first) continue;

        UnitKey candidate(ka);
        candidate.push_back(kb.back());

        bool all_subsets_dense = true;
        for (std::size_t skip = 0; skip + 1 < candidate.size() && all_subsets_dense;
             ++skip) {
          UnitKey sub;
          for (std::size_t q = 0; q < candidate.size(); ++q)
            if (q != skip) sub.push_back(candidate[q]);
          if (!current.count(sub)) all_subsets_dense = false;
        }
        if (!all_subsets_dense) continue;

        auto objects = intersect_sorted(a->second, b->second);
        if (objects.size() >= threshold)
          next.emplace(std::move(candidate), std::move(objects));
      }
    }
    if (!next.empty()) emit_level(next);
    current = std::move(next);
  }

  return CliqueResult{Clustering(std::move(clusters), n, d), std::move(all_units)};
}

Clustering run_clique(const Dataset& data, const CliqueParams& params) {
  return run_clique_detailed(data, params).clustering;
}

}  // namespace subspace
