#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <utility>
#include <vector>

#include "subspace/algo/clique.hpp"
#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"
#include "subspace/rng.hpp"

namespace testsupport {

// -- random fixtures ---------------------------------------------------------

inline subspace::Dataset random_dataset(subspace::Rng& rng, std::size_t n, std::size_t d) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(d));
  for (auto& row : rows)
    for (auto& v : row) v = rng.uniform01();
  std::vector<std::string> names;
  for (std::size_t j = 0; j < d; ++j) names.push_back("dim_" + std::to_string(j));
  return subspace::Dataset(std::move(rows), std::move(names));
}

inline std::vector<std::size_t> random_subset(subspace::Rng& rng, std::size_t bound,
                                              std::size_t count) {
  auto ids = rng.sample(bound, count);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// A valid random clustering over n objects and d dimensions; clusters may
// overlap in objects and dimensions.
inline subspace::Clustering random_clustering(subspace::Rng& rng, std::size_t n,
                                              std::size_t d, std::size_t max_clusters) {
  const std::size_t count = 1 + rng.index(max_clusters);
  std::vector<subspace::SubspaceCluster> clusters;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t objects = 1 + rng.index(n);
    const std::size_t dims = 1 + rng.index(d);
    clusters.emplace_back(random_subset(rng, n, objects), random_subset(rng, d, dims));
  }
  return subspace::Clustering(std::move(clusters), n, d);
}

// A random clustering whose clusters are pairwise object-disjoint (hence
// micro-object-disjoint).
inline subspace::Clustering random_disjoint_clustering(subspace::Rng& rng, std::size_t n,
                                                       std::size_t d,
                                                       std::size_t max_clusters) {
  std::vector<std::size_t> pool = rng.sample(n, n);  // shuffled object ids
  const std::size_t count = 1 + rng.index(max_clusters);
  std::vector<subspace::SubspaceCluster> clusters;
  std::size_t next = 0;
  for (std::size_t i = 0; i < count && next < n; ++i) {
    const std::size_t take = 1 + rng.index(std::max<std::size_t>(1, (n - next) / 2));
    std::vector<std::size_t> objects(pool.begin() + static_cast<std::ptrdiff_t>(next),
                                     pool.begin() + static_cast<std::ptrdiff_t>(next + take));
    next += take;
    const std::size_t dims = 1 + rng.index(d);
    clusters.emplace_back(std::move(objects), random_subset(rng, d, dims));
  }
  return subspace::Clustering(std::move(clusters), n, d);
}

// -- independent oracles -----------------------------------------------------

// Micro-object set via plain std::set enumeration.
inline std::set<std::pair<std::size_t, std::size_t>> micro_set_oracle(
    const subspace::SubspaceCluster& cluster) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t o : cluster.objects())
    for (std::size_t s : cluster.dims()) out.insert({o, s});
  return out;
}

// Exhaustive maximum-weight assignment for matrices up to ~8x8.
inline std::int64_t brute_force_assignment(
    const std::vector<std::vector<std::int64_t>>& weights) {
  if (weights.empty() || weights.front().empty()) return 0;
  const std::size_t rows = weights.size();
  const std::size_t cols = weights.front().size();
  const std::size_t m = std::max(rows, cols);
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  std::int64_t best = 0;
  do {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < rows; ++i)
      if (perm[i] < cols) total += weights[i][perm[i]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All dense units by direct enumeration over every subspace and cell, no
// levelwise pruning. Uses the same public grid assignment as the
// implementation but nothing of its search.
inline std::vector<subspace::DenseUnit> clique_oracle_units(const subspace::Dataset& data,
                                                            int xi, double tau) {
  const std::size_t n = data.size();
  const std::size_t d = data.dims();
  const auto threshold =
      static_cast<std::size_t>(std::ceil(tau * static_cast<double>(n)));

  std::vector<double> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = hi[j] = data.value(0, j);
    for (std::size_t i = 1; i < n; ++i) {
      lo[j] = std::min(lo[j], data.value(i, j));
      hi[j] = std::max(hi[j], data.value(i, j));
    }
  }

  std::vector<subspace::DenseUnit> units;
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < d; ++j)
      if (mask & (std::size_t{1} << j)) dims.push_back(j);

    std::map<std::vector<int>, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> cell;
      for (std::size_t j : dims)
        cell.push_back(subspace::grid_interval(data.value(i, j), lo[j], hi[j], xi));
      cells[std::move(cell)].push_back(i);
    }
    for (auto& [cell, objects] : cells)
      if (objects.size() >= threshold)
        units.push_back(subspace::DenseUnit{dims, cell, objects});
  }
  return units;
}

// Connected components of the oracle units of one subspace, discovered in
// cell-lex order, matching the output contract.
inline std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
clique_oracle_clusters(const std::vector<subspace::DenseUnit>& units) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> clusters;

  std::map<std::vector<std::size_t>, std::vector<const subspace::DenseUnit*>> by_subspace;
  for (const auto& unit : units) by_subspace[unit.dims].push_back(&unit);

  // Order: |S| ascending, then subspace lex.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<const subspace::DenseUnit*>>>
      groups(by_subspace.begin(), by_subspace.end());
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return a.first.size() < b.first.size();
  });

  for (auto& [dims, group] : groups) {
    std::sort(group.begin(), group.end(), [](const auto* a, const auto* b) {
      return a->cells < b->cells;
    });
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t u = 0; u < group.size(); ++u) index[group[u]->cells] = u;
    std::vector<bool> visited(group.size(), false);
    for (std::size_t start = 0; start < group.size(); ++start) {
      if (visited[start]) continue;
      std::set<std::size_t> objects;
      std::vector<std::size_t> stack{start};
      visited[start] = true;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        objects.insert(group[u]->objects.begin(), group[u]->objects.end());
        for (std::size_t p = 0; p < dims.size(); ++p) {
          for (int delta : {-1, 1}) {
            auto probe = group[u]->cells;
            probe[p] += delta;
            auto hit = index.find(probe);
            if (hit != index.end() && !visited[hit->second]) {
              visited[hit->second] = true;
              stack.push_back(hit->second);
            }
          }
        }
      }
      clusters.emplace_back(std::vector<std::size_t>(objects.begin(), objects.end()), dims);
    }
  }
  return clusters;
}

// -- process helpers ---------------------------------------------------------

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

#ifdef SUBSPACE_CLI_PATH
inline CliResult run_cli(const std::string& args, const std::filesystem::path& workdir) {
  const auto out_path = workdir / "stdout.txt";
  const auto err_path = workdir / "stderr.txt";
  const std::string command = std::string(SUBSPACE_CLI_PATH) + " " + args + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}
#endif

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("subspace_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace testsupport
