#pragma once

#include <vector>

#include "subspace/algo/params.hpp"
#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"
#include "subspace/rng.hpp"

namespace subspace {

// Monte-Carlo box clustering. Each outer round mines one cluster: ceil(2/a)
// seed points are tried, and per seed, m = ceil((2/a)^r * ln 4) random
// discriminating sets of r points vote dimensions into the box around the
// seed. The best candidate by quality mu(|C|, |D|) = |C| * (1/beta)^|D| is
// accepted, its objects are removed, and mining repeats (greedy peeling).
Clustering run_doc(const Dataset& data, const DocParams& params);

// Like run_doc, but a round maximizes |D| directly across all its trials,
// ends the search as soon as |D| reaches min(d0, d), and evaluates the
// support set only once for the winning dimension set.
Clustering run_fastdoc(const Dataset& data, const FastDocParams& params);

namespace detail {

struct BoxCandidate {
  bool valid = false;
  std::vector<std::size_t> objects;  // sorted
  std::vector<std::size_t> dims;     // sorted
  double quality = 0.0;              // log of mu, see quality_log_mu
};

// log mu(support, dim_count) = log(support) + dim_count * log(1/beta);
// monotone in mu, safe from overflow for large dimension counts.
double quality_log_mu(std::size_t support, std::size_t dim_count, double beta);

// Number of discriminating points: r = ceil(log(2d) / log(1/(2 beta))).
std::size_t discriminating_set_size(std::size_t d, double beta);

// Inner trials per seed: m = ceil((2/alpha)^r * ln 4), clamped to 2^30.
std::size_t inner_trials(double alpha, std::size_t r);

// DOC's Monte-Carlo search for one fixed seed object over the remaining
// (sorted) objects. min_support is the qualification bound on |C|.
BoxCandidate doc_mine_at_seed(const Dataset& data,
                              const std::vector<std::size_t>& remaining,
                              std::size_t seed_object, const DocParams& params,
                              std::size_t min_support, Rng& rng);

}  // namespace detail

}  // namespace subspace
