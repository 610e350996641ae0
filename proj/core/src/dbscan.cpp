#include "subspace/algo/dbscan.hpp"

#include <algorithm>
#include <deque>

#include "subspace/errors.hpp"

namespace subspace {

namespace {

double sq_distance(const Dataset& data, std::size_t a, std::size_t b,
                   const std::vector<std::size_t>& subspace) {
  double sum = 0.0;
  for (std::size_t dim : subspace) {
    const double diff = data.value(a, dim) - data.value(b, dim);
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

std::vector<std::vector<std::size_t>> run_dbscan(
    const Dataset& data, const std::vector<std::size_t>& subspace,
    const std::vector<std::size_t>& candidates, double eps, std::size_t min_pts) {
  if (subspace.empty()) throw InvalidParams("dbscan needs a non-empty subspace");
  if (eps <= 0.0) throw InvalidParams("eps must be > 0");
  if (min_pts < 1) throw InvalidParams("min_pts must be >= 1");

  std::vector<std::size_t> points(candidates);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t m = points.size();
  const double eps_sq = eps * eps;

  // Neighbor lists over candidate positions, including the point itself.
  std::vector<std::vector<std::size_t>> neighbors(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (sq_distance(data, points[i], points[j], subspace) <= eps_sq)
        neighbors[i].push_back(j);
    }
  }

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(m, kUnassigned);
  std::vector<std::vector<std::size_t>> clusters;

  for (std::size_t i = 0; i < m; ++i) {
    if (label[i] != kUnassigned || neighbors[i].size() < min_pts) continue;

    const std::size_t cluster_id = clusters.size();
    clusters.emplace_back();
    label[i] = cluster_id;
    std::deque<std::size_t> frontier{i};
    while (!frontier.empty()) {
      const std::size_t p = frontier.front();
      frontier.pop_front();
      clusters[cluster_id].push_back(points[p]);
      if (neighbors[p].size() < min_pts) continue;  // border point, no expansion
      for (std::size_t q : neighbors[p]) {
        if (label[q] != kUnassigned) continue;
        label[q] = cluster_id;
        frontier.push_back(q);
      }
    }
    std::sort(clusters[cluster_id].begin(), clusters[cluster_id].end());
  }
  return clusters;
}

}  // namespace subspace
