#include "subspace/eval/report.hpp"

#include <sstream>

#include "subspace/errors.hpp"
#include "subspace/eval/measures.hpp"
#include "subspace/format.hpp"

namespace subspace {

std::vector<std::string> EvaluationReport::lines() const {
  std::vector<std::string> out;
  for (const auto& [name, score] : entries) out.push_back(name + "=" + format_score(score));
  for (const auto& [name, scores] : per_cluster)
    for (const auto& [index, score] : scores)
      out.push_back(name + "[" + std::to_string(index) + "]=" + format_score(score));
  return out;
}

std::string EvaluationReport::csv_header() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ',';
    out << entries[i].first;
  }
  return out.str();
}

std::string EvaluationReport::csv_row() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ',';
    out << format_score(entries[i].second);
  }
  return out.str();
}

EvaluationReport evaluate_measures(const std::vector<std::string>& names,
                                   const Clustering& found, const Clustering& ref,
                                   const Dataset& data, bool with_per_cluster) {
  EvaluationReport report;
  if (found.empty())
    report.warnings.push_back("found clustering is empty; degenerate scores");

  for (const auto& name : names) {
    const MeasureFn fn = measure_by_name(name);
    if (!fn) throw UsageError("unknown measure '" + name + "'");
    report.entries.emplace_back(name, fn(found, ref, data));
  }

  if (with_per_cluster) {
    for (const auto& name : names) {
      if (name == "f1p")
        report.per_cluster.emplace_back(
            name, eval_per_cluster(PerClusterMeasure::F1P, found, ref, data));
      else if (name == "f1r")
        report.per_cluster.emplace_back(
            name, eval_per_cluster(PerClusterMeasure::F1R, found, ref, data));
      else if (name == "e4sc")
        report.per_cluster.emplace_back(
            name, eval_per_cluster(PerClusterMeasure::E4SC, found, ref, data));
    }
  }
  return report;
}

}  // namespace subspace
