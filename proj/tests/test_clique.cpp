#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "subspace/algo/clique.hpp"
#include "subspace/errors.hpp"
#include "support/support.hpp"

using namespace subspace;

namespace {

// Compare the implementation against the exhaustive oracle on one dataset.
void check_against_oracle(const Dataset& data, int xi, double tau) {
  const auto result = run_clique_detailed(data, CliqueParams(xi, tau));
  const auto oracle_units = testsupport::clique_oracle_units(data, xi, tau);

  auto unit_key = [](const DenseUnit& u) { return std::make_tuple(u.dims, u.cells, u.objects); };
  std::set<std::tuple<std::vector<std::size_t>, std::vector<int>, std::vector<std::size_t>>>
      got, expected;
  for (const auto& u : result.dense_units) got.insert(unit_key(u));
  for (const auto& u : oracle_units) expected.insert(unit_key(u));
  CHECK(got == expected);

  const auto oracle_clusters = testsupport::clique_oracle_clusters(oracle_units);
  REQUIRE(result.clustering.size() == oracle_clusters.size());
  std::multiset<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> got_c,
      expected_c;
  for (const auto& c : result.clustering.clusters())
    got_c.insert({c.objects(), c.dims()});
  for (const auto& [objects, dims] : oracle_clusters) expected_c.insert({objects, dims});
  CHECK(got_c == expected_c);
}

}  // namespace

TEST_CASE("grid interval boundary rules") {
  // Interior boundary values belong to the right interval.
  CHECK(grid_interval(0.0, 0.0, 1.0, 4) == 0);
  CHECK(grid_interval(0.25, 0.0, 1.0, 4) == 1);
  CHECK(grid_interval(0.5, 0.0, 1.0, 4) == 2);
  // The maximum joins the last interval.
  CHECK(grid_interval(1.0, 0.0, 1.0, 4) == 3);
  // Zero-width dimension forms a single interval.
  CHECK(grid_interval(3.0, 3.0, 3.0, 4) == 0);
}

TEST_CASE("dense corner inside a sparse frame") {
  // 20 points uniform in [0,0.1]^2 plus 5 scattered frame points; xi=10,
  // tau=0.5 needs 13 of 25 objects per unit, so only the corner cell in the
  // full space is dense, along with its 1-dim projections.
  Rng rng(8);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 20; ++i)
    rows.push_back({rng.uniform(0.0, 0.1), rng.uniform(0.0, 0.1)});
  rows.push_back({1.0, 1.0});
  rows.push_back({0.5, 0.9});
  rows.push_back({0.9, 0.5});
  rows.push_back({0.3, 0.7});
  rows.push_back({0.7, 0.3});
  Dataset data(std::move(rows), {"x", "y"});

  const auto clustering = run_clique(data, CliqueParams(10, 0.5));

  std::vector<std::size_t> corner;
  for (std::size_t i = 0; i < 20; ++i) corner.push_back(i);

  bool found_2d = false;
  for (const auto& c : clustering.clusters()) {
    if (c.dims() == std::vector<std::size_t>{0, 1}) {
      found_2d = true;
      CHECK(c.objects() == corner);
    }
  }
  CHECK(found_2d);

  check_against_oracle(data, 10, 0.5);
}

TEST_CASE("single point is dense everywhere at tau=1") {
  Dataset data({{0.4, 0.6, 0.1}}, {"a", "b", "c"});
  const auto clustering = run_clique(data, CliqueParams(2, 1.0));
  // One cluster per non-empty subspace, all holding object 0.
  CHECK(clustering.size() == 7);
  for (const auto& c : clustering.clusters())
    CHECK(c.objects() == std::vector<std::size_t>{0});
}

TEST_CASE("two separated points at tau=1 yield nothing") {
  Dataset data({{0.0, 0.0}, {1.0, 1.0}}, {"a", "b"});
  CHECK(run_clique(data, CliqueParams(2, 1.0)).empty());
}

TEST_CASE("output ordering: |S| ascending, then subspace lexicographic") {
  Rng rng(15);
  const auto data = testsupport::random_dataset(rng, 30, 3);
  const auto clustering = run_clique(data, CliqueParams(3, 0.1));
  std::vector<std::size_t> last_size{0};
  std::size_t prev_size = 0;
  std::vector<std::size_t> prev_dims;
  for (const auto& c : clustering.clusters()) {
    CHECK(c.dims().size() >= prev_size);
    if (c.dims().size() == prev_size && !prev_dims.empty())
      CHECK(prev_dims <= c.dims());
    if (c.dims().size() > prev_size) prev_dims.clear();
    prev_size = c.dims().size();
    prev_dims = c.dims();
  }
}

TEST_CASE("oracle equality over random small datasets") {
  Rng rng(99);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 2 + rng.index(30);
    const std::size_t d = 1 + rng.index(4);
    const int xi = 2 + static_cast<int>(rng.index(3));
    const double tau = 0.05 + 0.4 * rng.uniform01();
    const auto data = testsupport::random_dataset(rng, n, d);
    check_against_oracle(data, xi, tau);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CliqueParams(1, 0.5), InvalidParams);
  CHECK_THROWS_AS(CliqueParams(4, 0.0), InvalidParams);
  CHECK_THROWS_AS(CliqueParams(4, 1.5), InvalidParams);
}
