#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"

namespace subspace {

// Named measure scores for one found-vs-reference comparison, in request
// order, with optional per-cluster entries and degenerate-case warnings.
struct EvaluationReport {
  std::vector<std::pair<std::string, double>> entries;
  std::vector<std::pair<std::string, std::vector<std::pair<std::size_t, double>>>>
      per_cluster;
  std::vector<std::string> warnings;

  // "name=value" lines, fixed 6-decimal formatting, per-cluster entries as
  // "name[index]=value".
  std::vector<std::string> lines() const;

  // One CSV row of the scores in entry order, for sweep aggregation.
  std::string csv_header() const;
  std::string csv_row() const;
};

// Runs the named measures in request order (duplicates run twice). Unknown
// names throw UsageError; an empty found clustering is scored per the
// degenerate contracts and flagged in warnings. with_per_cluster adds
// per-cluster entries for the measures that support them (f1p, f1r, e4sc).
EvaluationReport evaluate_measures(const std::vector<std::string>& names,
                                   const Clustering& found, const Clustering& ref,
                                   const Dataset& data, bool with_per_cluster = false);

}  // namespace subspace
