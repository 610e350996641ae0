#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace/eval/hungarian.hpp"
#include "subspace/rng.hpp"
#include "support/support.hpp"

using namespace subspace;

TEST_CASE("hand-checkable matchings") {
  CHECK(max_weight_assignment({}) == 0);
  CHECK(max_weight_assignment({{5}}) == 5);
  // Diagonal trap: the greedy pick 9 forces total 9+1, optimum is 8+7.
  CHECK(max_weight_assignment({{9, 8}, {7, 1}}) == 15);
  // Rectangular: more rows than columns.
  CHECK(max_weight_assignment({{4}, {9}, {2}}) == 9);
  // Zero matrix.
  CHECK(max_weight_assignment({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("matches permutation brute force on random instances") {
  Rng rng(2718);
  for (int round = 0; round < 300; ++round) {
    const std::size_t rows = 1 + rng.index(6);
    const std::size_t cols = 1 + rng.index(6);
    std::vector<std::vector<std::int64_t>> weights(rows, std::vector<std::int64_t>(cols));
    for (auto& row : weights)
      for (auto& w : row) w = static_cast<std::int64_t>(rng.below(1000));
    CHECK(max_weight_assignment(weights) == testsupport::brute_force_assignment(weights));
  }
}
