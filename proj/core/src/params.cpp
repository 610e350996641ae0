#include "subspace/algo/params.hpp"

#include <string>

#include "subspace/errors.hpp"

namespace subspace {

namespace {

void check(bool ok, const std::string& message) {
  if (!ok) throw InvalidParams(message);
}

void check_doc_bounds(double alpha, double beta, double w, std::size_t max_clusters) {
  check(alpha > 0.0 && alpha <= 1.0, "alpha must be in (0,1]");
  // beta = 0.5 would make the discriminating-set size unbounded.
  check(beta > 0.0 && beta < 0.5, "beta must be in (0,0.5)");
  check(w > 0.0, "w must be > 0");
  check(max_clusters >= 1, "max_clusters must be >= 1");
}

}  // namespace

CliqueParams::CliqueParams(int xi_, double tau_) : xi(xi_), tau(tau_) {
  check(xi >= 2, "xi must be >= 2");
  check(tau > 0.0 && tau <= 1.0, "tau must be in (0,1]");
}

SubcluParams::SubcluParams(double eps_, std::size_t min_pts_)
    : eps(eps_), min_pts(min_pts_) {
  check(eps > 0.0, "eps must be > 0");
  check(min_pts >= 1, "min_pts must be >= 1");
}

ProclusParams::ProclusParams(std::size_t k_, std::size_t l_, std::uint64_t seed_)
    : k(k_), l(l_), seed(seed_) {
  check(k >= 1, "k must be >= 1");
  check(l >= 2, "l must be >= 2");
}

DocParams::DocParams(double alpha_, double beta_, double w_, std::size_t max_clusters_,
                     std::uint64_t seed_)
    : alpha(alpha_), beta(beta_), w(w_), max_clusters(max_clusters_), seed(seed_) {
  check_doc_bounds(alpha, beta, w, max_clusters);
}

FastDocParams::FastDocParams(double alpha_, double beta_, double w_,
                             std::size_t max_clusters_, std::size_t d0_,
                             std::uint64_t seed_)
    : base(alpha_, beta_, w_, max_clusters_, seed_), d0(d0_) {
  check(d0 >= 1, "d0 must be >= 1");
}

MineclusParams::MineclusParams(double alpha_, double beta_, double w_,
                               std::size_t max_clusters_, std::uint64_t seed_)
    : alpha(alpha_), beta(beta_), w(w_), max_clusters(max_clusters_), seed(seed_) {
  check_doc_bounds(alpha, beta, w, max_clusters);
}

}  // namespace subspace
