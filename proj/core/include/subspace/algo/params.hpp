#pragma once

#include <cstdint>

namespace subspace {

// Parameter records validate their bounds at construction and throw
// InvalidParams on violation. Randomized algorithms take an explicit 64-bit
// seed; equal (dataset, params, seed) always yields the identical result.

struct CliqueParams {
  int xi;      // intervals per dimension, >= 2
  double tau;  // density fraction in (0, 1]

  CliqueParams(int xi, double tau);
};

struct SubcluParams {
  double eps;           // neighborhood radius, > 0
  std::size_t min_pts;  // core point threshold, >= 1

  SubcluParams(double eps, std::size_t min_pts);
};

struct ProclusParams {
  std::size_t k;       // clusters, >= 1
  std::size_t l;       // average relevant dimensions per cluster, >= 2
  std::uint64_t seed;

  // Named defaults of the initialization phase; overridable.
  std::size_t sample_factor = 30;     // sample size = sample_factor * k
  std::size_t candidate_factor = 3;   // candidate medoids = candidate_factor * k

  ProclusParams(std::size_t k, std::size_t l, std::uint64_t seed = 0);
};

struct DocParams {
  double alpha;  // minimum cluster fraction, in (0, 1]
  double beta;   // quality balance, in (0, 0.5)
  double w;      // per-dimension half width, > 0
  std::size_t max_clusters;
  std::uint64_t seed;

  DocParams(double alpha, double beta, double w, std::size_t max_clusters,
            std::uint64_t seed = 0);
};

struct FastDocParams {
  DocParams base;
  std::size_t d0;  // dimension-count bound that ends a round's inner search, >= 1

  FastDocParams(double alpha, double beta, double w, std::size_t max_clusters,
                std::size_t d0, std::uint64_t seed = 0);
};

struct MineclusParams {
  double alpha;
  double beta;
  double w;
  std::size_t max_clusters;
  std::uint64_t seed;

  MineclusParams(double alpha, double beta, double w, std::size_t max_clusters,
                 std::uint64_t seed = 0);
};

}  // namespace subspace
