#pragma once

#include <cstdint>
#include <vector>

namespace subspace {

// Maximum total weight of a one-to-one assignment between rows and columns
// of a non-negative weight matrix. The matrix is zero-padded to square
// internally, so unequal side counts are fine. O(m^3) potentials method.
std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights);

}  // namespace subspace
