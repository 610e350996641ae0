#pragma once

#include <optional>
#include <string>
#include <vector>

namespace subspace {

// n objects by d numeric dimensions with named columns. Immutable after
// construction; every value is a finite real and column names are unique.
class Dataset {
 public:
  Dataset(std::vector<std::vector<double>> rows,
          std::vector<std::string> dim_names,
          std::optional<std::string> source_label = std::nullopt);

  std::size_t size() const { return rows_.size(); }       // n
  std::size_t dims() const { return dim_names_.size(); }  // d

  const std::vector<double>& row(std::size_t obj) const { return rows_[obj]; }
  double value(std::size_t obj, std::size_t dim) const { return rows_[obj][dim]; }

  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::string>& dim_names() const { return dim_names_; }
  const std::optional<std::string>& source_label() const { return source_label_; }

  bool operator==(const Dataset& other) const {
    return rows_ == other.rows_ && dim_names_ == other.dim_names_;
  }

 private:
  std::vector<std::vector<double>> rows_;
  std::vector<std::string> dim_names_;
  std::optional<std::string> source_label_;
};

}  // namespace subspace
