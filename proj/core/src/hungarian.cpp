#include "subspace/eval/hungarian.hpp"

#include <algorithm>
#include <limits>

namespace subspace {

std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights) {
  if (weights.empty()) return 0;
  const std::size_t rows = weights.size();
  const std::size_t cols = weights.front().size();
  if (cols == 0) return 0;
  const std::size_t m = std::max(rows, cols);

  // Min-cost assignment on the negated, zero-padded square matrix.
  auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
    if (i < rows && j < cols) return -weights[i][j];
    return 0;
  };

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based arrays; match[j] = row assigned to column j, column 0 is the
  // staging slot for the row currently being inserted.
  std::vector<std::int64_t> row_potential(m + 1, 0), col_potential(m + 1, 0);
  std::vector<std::size_t> match(m + 1, 0), path(m + 1, 0);

  for (std::size_t i = 1; i <= m; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> min_value(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const std::int64_t reduced =
            cost(i0 - 1, j - 1) - row_potential[i0] - col_potential[j];
        if (reduced < min_value[j]) {
          min_value[j] = reduced;
          path[j] = j0;
        }
        if (min_value[j] < delta) {
          delta = min_value[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          row_potential[match[j]] += delta;
          col_potential[j] -= delta;
        } else {
          min_value[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = path[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::int64_t total = 0;
  for (std::size_t j = 1; j <= m; ++j) total += cost(match[j] - 1, j - 1);
  return -total;
}

}  // namespace subspace
