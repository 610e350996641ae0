#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace/algo/dbscan.hpp"
#include "subspace/errors.hpp"
#include "support/support.hpp"

using namespace subspace;

namespace {

Dataset line(std::initializer_list<double> values) {
  std::vector<std::vector<double>> rows;
  for (double v : values) rows.push_back({v});
  return Dataset(std::move(rows), {"x"});
}

}  // namespace

TEST_CASE("chain of close points forms one cluster, far point is noise") {
  const auto data = line({0.0, 0.1, 0.2, 5.0});
  const auto clusters = run_dbscan(data, {0}, {0, 1, 2, 3}, 0.15, 2);
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("eps below every pairwise distance yields nothing") {
  const auto data = line({0.0, 1.0, 2.0});
  CHECK(run_dbscan(data, {0}, {0, 1, 2}, 0.5, 2).empty());
}

TEST_CASE("min_pts = 1 makes every candidate a core point of some cluster") {
  Rng rng(42);
  const auto data = testsupport::random_dataset(rng, 25, 3);
  std::vector<std::size_t> all(25);
  for (std::size_t i = 0; i < 25; ++i) all[i] = i;
  const auto clusters = run_dbscan(data, {0, 1, 2}, all, 0.05, 1);
  std::size_t covered = 0;
  for (const auto& c : clusters) covered += c.size();
  CHECK(covered == 25);
}

TEST_CASE("distance is restricted to the subspace") {
  // Identical in dim 0, far apart in dim 1.
  Dataset data({{1.0, 0.0}, {1.0, 9.0}}, {"a", "b"});
  CHECK(run_dbscan(data, {0}, {0, 1}, 0.1, 2).size() == 1);
  CHECK(run_dbscan(data, {0, 1}, {0, 1}, 0.1, 2).empty());
}

TEST_CASE("border point goes to the cluster discovered first") {
  // Two 4-point cores around 0 and around 2; the point at 1.15 (id 8) sees
  // only one core of each side plus itself (3 < min_pts = 4), so it is a
  // border point of both and lands in the earlier cluster.
  const auto data = line({0.0, 0.1, 0.2, 0.3, 2.0, 2.1, 2.2, 2.3, 1.15});
  const auto clusters = run_dbscan(data, {0}, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.86, 4);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0] == std::vector<std::size_t>{0, 1, 2, 3, 8});
  CHECK(clusters[1] == std::vector<std::size_t>{4, 5, 6, 7});
}

TEST_CASE("candidate restriction is honored") {
  const auto data = line({0.0, 0.1, 0.2, 5.0});
  const auto clusters = run_dbscan(data, {0}, {0, 2}, 0.25, 2);
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0] == std::vector<std::size_t>{0, 2});
}

TEST_CASE("parameter validation") {
  const auto data = line({0.0});
  CHECK_THROWS_AS(run_dbscan(data, {}, {0}, 0.1, 1), InvalidParams);
  CHECK_THROWS_AS(run_dbscan(data, {0}, {0}, 0.0, 1), InvalidParams);
  CHECK_THROWS_AS(run_dbscan(data, {0}, {0}, 0.1, 0), InvalidParams);
}
