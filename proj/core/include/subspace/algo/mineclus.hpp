#pragma once

#include <vector>

#include "subspace/algo/doc.hpp"
#include "subspace/algo/params.hpp"
#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"

namespace subspace {

// DOC's outer loop with the Monte-Carlo inner search replaced by exact
// frequent-itemset mining: per seed point every object contributes the
// itemset of dimensions on which it stays within w of the seed, all
// itemsets with support >= ceil(alpha*n) are mined levelwise, and the one
// maximizing mu(support, |itemset|) wins. Greedy peeling as in run_doc.
Clustering run_mineclus(const Dataset& data, const MineclusParams& params);

namespace detail {

// Exact best box for one fixed seed object; dominates every Monte-Carlo
// candidate of doc_mine_at_seed for the same seed and remaining set.
BoxCandidate mineclus_mine_at_seed(const Dataset& data,
                                   const std::vector<std::size_t>& remaining,
                                   std::size_t seed_object, double beta, double w,
                                   std::size_t min_support);

}  // namespace detail

}  // namespace subspace
