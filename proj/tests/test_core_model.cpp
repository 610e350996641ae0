#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"
#include "subspace/errors.hpp"
#include "support/support.hpp"

using namespace subspace;

TEST_CASE("dataset construction enforces shape and value invariants") {
  CHECK_NOTHROW(Dataset({{1.0, 2.0}, {3.0, 4.0}}, {"a", "b"}));
  CHECK_NOTHROW(Dataset({}, {"a"}));  // n = 0 is fine

  CHECK_THROWS_AS(Dataset({{1.0}}, {}), InvalidModel);
  CHECK_THROWS_AS(Dataset({{1.0, 2.0}, {3.0}}, {"a", "b"}), InvalidModel);
  CHECK_THROWS_AS(Dataset({{1.0}}, {"a", "a"}), InvalidModel);
  CHECK_THROWS_AS(Dataset({{std::numeric_limits<double>::quiet_NaN()}}, {"a"}),
                  InvalidModel);
  CHECK_THROWS_AS(Dataset({{std::numeric_limits<double>::infinity()}}, {"a"}),
                  InvalidModel);
}

TEST_CASE("clusters reject empty sides and out-of-range ids") {
  CHECK_THROWS_AS(SubspaceCluster({}, {0}), InvalidModel);
  CHECK_THROWS_AS(SubspaceCluster({0}, {}), InvalidModel);

  SubspaceCluster c({2, 0, 2}, {1, 1, 0});
  CHECK(c.objects() == std::vector<std::size_t>{0, 2});  // sorted, deduplicated
  CHECK(c.dims() == std::vector<std::size_t>{0, 1});

  CHECK_NOTHROW(Clustering({c}, 3, 2));
  CHECK_THROWS_AS(Clustering({c}, 2, 2), InvalidModel);  // object 2 out of range
  CHECK_THROWS_AS(Clustering({c}, 3, 1), InvalidModel);  // dim 1 out of range
}

TEST_CASE("micro_objects is the Cartesian product") {
  CHECK(micro_objects(SubspaceCluster({0, 1}, {2})).pairs() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
  CHECK(micro_objects(SubspaceCluster({5}, {0, 1, 3})).pairs() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{5, 0}, {5, 1}, {5, 3}});
  CHECK(micro_objects(SubspaceCluster({0, 1, 2}, {0, 1})).size() == 6);
}

TEST_CASE("clustering_micro_union collapses duplicates and ignores order") {
  Clustering duplicated({SubspaceCluster({0}, {0}), SubspaceCluster({0}, {0})}, 1, 1);
  CHECK(clustering_micro_union(duplicated).size() == 1);
  CHECK(clustering_micro_union(duplicated).contains(0, 0));

  Clustering disjoint({SubspaceCluster({0}, {0}), SubspaceCluster({1}, {1})}, 2, 2);
  CHECK(clustering_micro_union(disjoint).pairs() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});

  Clustering overlapping({SubspaceCluster({0, 1}, {0}), SubspaceCluster({1}, {0, 1})}, 2, 2);
  CHECK(clustering_micro_union(overlapping).pairs() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("micro-object properties over random clusters") {
  Rng rng(1234);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.index(30);
    const std::size_t d = 1 + rng.index(8);
    const auto clustering = testsupport::random_clustering(rng, n, d, 5);

    // |micro(C)| = |O| * |S|, and the packed set matches the naive oracle.
    for (const auto& cluster : clustering.clusters()) {
      const auto micro = micro_objects(cluster);
      CHECK(micro.size() == cluster.objects().size() * cluster.dims().size());
      const auto oracle = testsupport::micro_set_oracle(cluster);
      CHECK(micro.size() == oracle.size());
      for (const auto& [o, s] : oracle) CHECK(micro.contains(o, s));
    }

    // Union is idempotent under duplication and order-independent.
    auto doubled = clustering.clusters();
    doubled.insert(doubled.end(), clustering.clusters().begin(),
                   clustering.clusters().end());
    std::reverse(doubled.begin(), doubled.end());
    Clustering shuffled(std::move(doubled), n, d);
    CHECK(clustering_micro_union(clustering) == clustering_micro_union(shuffled));
  }
}

TEST_CASE("micro intersection shortcut agrees with set enumeration") {
  Rng rng(77);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng.index(20);
    const std::size_t d = 1 + rng.index(6);
    const auto a = testsupport::random_clustering(rng, n, d, 1)[0];
    const auto b = testsupport::random_clustering(rng, n, d, 1)[0];
    const auto oa = testsupport::micro_set_oracle(a);
    const auto ob = testsupport::micro_set_oracle(b);
    std::size_t expected = 0;
    for (const auto& p : oa) expected += ob.count(p);
    CHECK(micro_intersection_size(a, b) == expected);
    CHECK(MicroObjectSet::intersection_size(micro_objects(a), micro_objects(b)) ==
          expected);
  }
}
