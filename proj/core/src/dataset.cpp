#include "subspace/dataset.hpp"

#include <cmath>
#include <unordered_set>

#include "subspace/errors.hpp"

namespace subspace {

Dataset::Dataset(std::vector<std::vector<double>> rows,
                 std::vector<std::string> dim_names,
                 std::optional<std::string> source_label)
    : rows_(std::move(rows)),
      dim_names_(std::move(dim_names)),
      source_label_(std::move(source_label)) {
  if (dim_names_.empty()) throw InvalidModel("dataset needs at least one dimension");

  std::unordered_set<std::string> seen;
  for (const auto& name : dim_names_) {
    if (!seen.insert(name).second)
      throw InvalidModel("duplicate dimension name: " + name);
  }

  const std::size_t d = dim_names_.size();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != d)
      throw InvalidModel("row " + std::to_string(i) + " has " +
                         std::to_string(rows_[i].size()) + " values, expected " +
                         std::to_string(d));
    for (double v : rows_[i]) {
      if (!std::isfinite(v))
        throw InvalidModel("row " + std::to_string(i) + " contains a non-finite value");
    }
  }
}

}  // namespace subspace
