#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subspace/errors.hpp"
#include "subspace/eval/measures.hpp"
#include "subspace/eval/report.hpp"
#include "support/support.hpp"

using namespace subspace;

namespace {

Dataset dummy_data(std::size_t n, std::size_t d) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(d, 0.5));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < d; ++j) names.push_back("dim_" + std::to_string(j));
  return Dataset(std::move(rows), std::move(names));
}

}  // namespace

TEST_CASE("rnia") {
  const auto data = dummy_data(4, 2);
  Clustering ref({SubspaceCluster({0, 1}, {0})}, 4, 2);
  Clustering found({SubspaceCluster({0, 1}, {0, 1})}, 4, 2);

  CHECK(eval_rnia(ref, ref, data) == 1.0);
  // |F n R| = 2, |F u R| = 4.
  CHECK(eval_rnia(found, ref, data) == 0.5);

  Clustering other({SubspaceCluster({2, 3}, {1})}, 4, 2);
  CHECK(eval_rnia(other, ref, data) == 0.0);
}

TEST_CASE("ce") {
  const auto data = dummy_data(4, 1);

  Clustering ref({SubspaceCluster({0, 1, 2, 3}, {0})}, 4, 1);
  Clustering split({SubspaceCluster({0, 1}, {0}), SubspaceCluster({2, 3}, {0})}, 4, 1);
  // Best one-to-one match covers 2 of the 4 micro-objects.
  CHECK(eval_ce(split, ref, data) == 0.5);

  Clustering disjoint(
      {SubspaceCluster({0, 1}, {0}), SubspaceCluster({2, 3}, {0})}, 4, 1);
  CHECK(eval_ce(disjoint, disjoint, data) == 1.0);

  const auto data2 = dummy_data(4, 2);
  Clustering ref2({SubspaceCluster({0, 1}, {0})}, 4, 2);
  Clustering found2({SubspaceCluster({0, 1}, {0, 1})}, 4, 2);
  CHECK(eval_ce(found2, ref2, data2) == 0.5);
}

TEST_CASE("f1p and f1r") {
  const auto data = dummy_data(4, 1);
  Clustering ref({SubspaceCluster({0, 1, 2, 3}, {0})}, 4, 1);
  Clustering split({SubspaceCluster({0, 1}, {0}), SubspaceCluster({2, 3}, {0})}, 4, 1);

  CHECK(eval_f1p(ref, ref, data) == 1.0);
  CHECK(eval_f1r(ref, ref, data) == 1.0);
  CHECK(eval_f1r(split, ref, data) == doctest::Approx(2.0 / 3.0));
  CHECK(eval_f1p(split, ref, data) == doctest::Approx(2.0 / 3.0));

  Clustering misses({SubspaceCluster({0, 1}, {0})}, 4, 1);
  Clustering other({SubspaceCluster({2, 3}, {0})}, 4, 1);
  CHECK(eval_f1p(misses, other, data) == 0.0);
  CHECK(eval_f1r(misses, other, data) == 0.0);
}

TEST_CASE("e4sc") {
  const auto data = dummy_data(4, 2);
  Clustering ref({SubspaceCluster({0, 1}, {0})}, 4, 2);
  Clustering found({SubspaceCluster({0, 1}, {0, 1})}, 4, 2);

  CHECK(eval_e4sc(ref, ref, data) == 1.0);
  // f1 = 2*2/(2+4) = 2/3 on both sides.
  CHECK(eval_e4sc(found, ref, data) == doctest::Approx(2.0 / 3.0));

  Clustering other({SubspaceCluster({2, 3}, {1})}, 4, 2);
  CHECK(eval_e4sc(other, ref, data) == 0.0);
}

TEST_CASE("entropy") {
  const auto data = dummy_data(4, 1);

  Clustering ref({SubspaceCluster({0, 1}, {0}), SubspaceCluster({2, 3}, {0})}, 4, 1);
  CHECK(eval_entropy(ref, ref, data) == 1.0);

  // One found cluster mixing both labels uniformly: E = ln 2, L = 2.
  Clustering mixed({SubspaceCluster({0, 1, 2, 3}, {0})}, 4, 1);
  CHECK(eval_entropy(mixed, ref, data) == doctest::Approx(0.0));

  // Empty found clustering is pinned to 0.
  Clustering empty({}, 4, 1);
  CHECK(eval_entropy(empty, ref, data) == 0.0);
}

TEST_CASE("per-cluster results") {
  const auto data = dummy_data(4, 2);
  Clustering ref({SubspaceCluster({0, 1, 2, 3}, {0})}, 4, 2);
  Clustering split({SubspaceCluster({0, 1}, {0}), SubspaceCluster({2, 3}, {0})}, 4, 2);

  const auto identity = eval_per_cluster(PerClusterMeasure::F1P, ref, ref, data);
  REQUIRE(identity.size() == 1);
  CHECK(identity[0].second == 1.0);

  const auto f1p = eval_per_cluster(PerClusterMeasure::F1P, split, ref, data);
  REQUIRE(f1p.size() == 2);
  CHECK(f1p[0].second == doctest::Approx(2.0 / 3.0));
  CHECK(f1p[1].second == doctest::Approx(2.0 / 3.0));

  Clustering ref_m({SubspaceCluster({0, 1}, {0})}, 4, 2);
  Clustering found_m({SubspaceCluster({0, 1}, {0, 1})}, 4, 2);
  const auto e4sc = eval_per_cluster(PerClusterMeasure::E4SC, found_m, ref_m, data);
  REQUIRE(e4sc.size() == 1);
  CHECK(e4sc[0].second == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("errors: dimension mismatch and empty reference") {
  const auto data = dummy_data(4, 2);
  Clustering ok({SubspaceCluster({0}, {0})}, 4, 2);
  Clustering wrong_n({SubspaceCluster({0}, {0})}, 5, 2);
  Clustering wrong_d({SubspaceCluster({0}, {0})}, 4, 3);
  CHECK_THROWS_AS(eval_rnia(wrong_n, ok, data), DimensionMismatch);
  CHECK_THROWS_AS(eval_ce(ok, wrong_d, data), DimensionMismatch);

  Clustering empty({}, 4, 2);
  CHECK_THROWS_AS(eval_f1p(ok, empty, data), EmptyReference);
  CHECK_THROWS_AS(eval_f1r(ok, empty, data), EmptyReference);
  CHECK_THROWS_AS(eval_entropy(ok, empty, data), EmptyReference);
  // The micro-object measures stay total.
  CHECK(eval_rnia(ok, empty, data) == 0.0);
  CHECK(eval_ce(ok, empty, data) == 0.0);
  CHECK(eval_e4sc(ok, empty, data) == 0.0);
  CHECK(eval_rnia(empty, empty, data) == 1.0);
  CHECK(eval_ce(empty, empty, data) == 1.0);
}

TEST_CASE("identity, range and symmetry properties over random clusterings") {
  Rng rng(555);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 2 + rng.index(25);
    const std::size_t d = 1 + rng.index(6);
    const auto data = dummy_data(n, d);
    const auto a = testsupport::random_clustering(rng, n, d, 5);
    const auto b = testsupport::random_clustering(rng, n, d, 5);

    CHECK(eval_ce(a, a, data) == 1.0);
    CHECK(eval_rnia(a, a, data) == 1.0);
    CHECK(eval_f1p(a, a, data) == 1.0);
    CHECK(eval_f1r(a, a, data) == 1.0);
    CHECK(eval_e4sc(a, a, data) == 1.0);

    for (const auto fn : {eval_rnia, eval_ce, eval_f1p, eval_f1r, eval_e4sc, eval_entropy}) {
      const double score = fn(a, b, data);
      CHECK(score >= 0.0);
      CHECK(score <= 1.0);
    }

    CHECK(eval_rnia(a, b, data) == eval_rnia(b, a, data));
    CHECK(eval_e4sc(a, b, data) == doctest::Approx(eval_e4sc(b, a, data)).epsilon(1e-12));
    CHECK(eval_f1p(a, b, data) == eval_f1r(b, a, data));

    const auto da = testsupport::random_disjoint_clustering(rng, n, d, 4);
    const auto db = testsupport::random_disjoint_clustering(rng, n, d, 4);
    CHECK(eval_entropy(da, da, data) == 1.0);
    CHECK(eval_ce(da, db, data) <= eval_rnia(da, db, data) + 1e-12);
  }
}

TEST_CASE("removing a matching cluster never raises f1r") {
  Rng rng(556);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 3 + rng.index(20);
    const std::size_t d = 1 + rng.index(5);
    const auto data = dummy_data(n, d);
    const auto ref = testsupport::random_clustering(rng, n, d, 4);
    auto found_clusters = ref.clusters();
    const double full = eval_f1r(Clustering(found_clusters, n, d), ref, data);
    if (found_clusters.size() < 2) continue;
    found_clusters.pop_back();
    const double reduced = eval_f1r(Clustering(found_clusters, n, d), ref, data);
    CHECK(reduced <= full + 1e-12);
  }
}

TEST_CASE("report formatting and orchestration") {
  const auto data = dummy_data(4, 2);
  Clustering ref({SubspaceCluster({0, 1}, {0})}, 4, 2);
  Clustering found({SubspaceCluster({0, 1}, {0, 1})}, 4, 2);

  const auto report = evaluate_measures({"e4sc", "ce", "e4sc"}, found, ref, data, true);
  REQUIRE(report.entries.size() == 3);  // duplicates evaluated twice
  CHECK(report.entries[0].first == "e4sc");
  CHECK(report.entries[1].first == "ce");
  const auto lines = report.lines();
  CHECK(lines[0] == "e4sc=0.666667");
  CHECK(lines[1] == "ce=0.500000");
  CHECK(lines[2] == "e4sc=0.666667");
  CHECK(lines[3] == "e4sc[0]=0.666667");
  CHECK(report.csv_header() == "e4sc,ce,e4sc");
  CHECK(report.csv_row() == "0.666667,0.500000,0.666667");

  CHECK_THROWS_AS(evaluate_measures({"nosuch"}, found, ref, data), UsageError);

  Clustering empty({}, 4, 2);
  const auto degenerate = evaluate_measures({"rnia"}, empty, ref, data);
  CHECK(degenerate.entries[0].second == 0.0);
  CHECK(!degenerate.warnings.empty());
}
