#include "subspace/eval/measures.hpp"

#include <algorithm>
#include <cmath>

#include "subspace/errors.hpp"
#include "subspace/eval/hungarian.hpp"

namespace subspace {

namespace {

void check_refs(const Clustering& found, const Clustering& ref, const Dataset& data) {
  if (found.n_ref() != data.size() || ref.n_ref() != data.size())
    throw DimensionMismatch("clustering references n=" +
                            std::to_string(found.n_ref() != data.size() ? found.n_ref()
                                                                        : ref.n_ref()) +
                            ", dataset has n=" + std::to_string(data.size()));
  if (found.d_ref() != data.dims() || ref.d_ref() != data.dims())
    throw DimensionMismatch("clustering references d=" +
                            std::to_string(found.d_ref() != data.dims() ? found.d_ref()
                                                                        : ref.d_ref()) +
                            ", dataset has d=" + std::to_string(data.dims()));
}

void require_reference(const Clustering& ref) {
  if (ref.empty()) throw EmptyReference("reference clustering has no clusters");
}

double object_f1(const SubspaceCluster& a, const SubspaceCluster& b) {
  const std::size_t shared = sorted_intersection_size(a.objects(), b.objects());
  return 2.0 * static_cast<double>(shared) /
         static_cast<double>(a.objects().size() + b.objects().size());
}

double micro_f1(const SubspaceCluster& a, const SubspaceCluster& b) {
  const std::size_t shared = micro_intersection_size(a, b);
  const std::size_t size_a = a.objects().size() * a.dims().size();
  const std::size_t size_b = b.objects().size() * b.dims().size();
  return 2.0 * static_cast<double>(shared) / static_cast<double>(size_a + size_b);
}

// Micro-object-weighted mean over 'from' of the best micro F1 against 'to'.
double weighted_best_micro_f1(const Clustering& from, const Clustering& to) {
  double weighted = 0.0;
  double total_weight = 0.0;
  for (const auto& cluster : from.clusters()) {
    double best = 0.0;
    for (const auto& other : to.clusters()) best = std::max(best, micro_f1(cluster, other));
    const auto weight =
        static_cast<double>(cluster.objects().size() * cluster.dims().size());
    weighted += weight * best;
    total_weight += weight;
  }
  return total_weight > 0.0 ? weighted / total_weight : 0.0;
}

}  // namespace

double eval_rnia(const Clustering& found, const Clustering& ref, const Dataset& data) {
  check_refs(found, ref, data);
  const MicroObjectSet f = clustering_micro_union(found);
  const MicroObjectSet r = clustering_micro_union(ref);
  const std::size_t union_size = MicroObjectSet::union_size(f, r);
  if (union_size == 0) return 1.0;
  return static_cast<double>(MicroObjectSet::intersection_size(f, r)) /
         static_cast<double>(union_size);
}

double eval_ce(const Clustering& found, const Clustering& ref, const Dataset& data) {
  check_refs(found, ref, data);
  const MicroObjectSet f = clustering_micro_union(found);
  const MicroObjectSet r = clustering_micro_union(ref);
  const std::size_t union_size = MicroObjectSet::union_size(f, r);
  if (union_size == 0) return 1.0;

  std::vector<std::vector<std::int64_t>> weights(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    weights[i].resize(ref.size());
    for (std::size_t j = 0; j < ref.size(); ++j)
      weights[i][j] = static_cast<std::int64_t>(micro_intersection_size(found[i], ref[j]));
  }
  const std::int64_t matched = max_weight_assignment(weights);
  // Matched pairs count shared micro-objects once per pair, so internally
  // overlapping clusterings can push the sum past the set-union size; the
  // clamp keeps the score total without touching the disjoint case.
  return std::min(1.0, static_cast<double>(matched) / static_cast<double>(union_size));
}

double eval_f1p(const Clustering& found, const Clustering& ref, const Dataset& data) {
  check_refs(found, ref, data);
  require_reference(ref);
  if (found.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& cluster : found.clusters()) {
    double best = 0.0;
    for (const auto& other : ref.clusters()) best = std::max(best, object_f1(cluster, other));
    sum += best;
  }
  return sum / static_cast<double>(found.size());
}

double eval_f1r(const Clustering& found, const Clustering& ref, const Dataset& data) {
  check_refs(found, ref, data);
  require_reference(ref);
  if (found.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& cluster : ref.clusters()) {
    double best = 0.0;
    for (const auto& other : found.clusters())
      best = std::max(best, object_f1(cluster, other));
    sum += best;
  }
  return sum / static_cast<double>(ref.size());
}

double eval_e4sc(const Clustering& found, const Clustering& ref, const Dataset& data) {
  check_refs(found, ref, data);
  const double precision_side = weighted_best_micro_f1(found, ref);
  const double recall_side = weighted_best_micro_f1(ref, found);
  if (precision_side <= 0.0 || recall_side <= 0.0) return 0.0;
  return 2.0 * precision_side * recall_side / (precision_side + recall_side);
}

double eval_entropy(const Clustering& found, const Clustering& ref, const Dataset& data) {
  check_refs(found, ref, data);
  require_reference(ref);
  if (found.empty()) return 0.0;

  // Label per object: lowest-index reference cluster, else the noise label.
  const std::size_t noise = ref.size();
  std::vector<std::size_t> label(data.size(), noise);
  for (std::size_t j = ref.size(); j-- > 0;)
    for (std::size_t obj : ref[j].objects()) label[obj] = j;

  std::vector<bool> present(ref.size() + 1, false);
  for (std::size_t obj = 0; obj < data.size(); ++obj) present[label[obj]] = true;
  std::size_t label_count = 0;
  for (bool p : present) label_count += p ? 1 : 0;
  if (label_count <= 1) return 1.0;

  double entropy_sum = 0.0;
  std::size_t total = 0;
  for (const auto& cluster : found.clusters()) {
    std::vector<std::size_t> counts(ref.size() + 1, 0);
    for (std::size_t obj : cluster.objects()) ++counts[label[obj]];
    double entropy = 0.0;
    for (std::size_t c : counts) {
      if (c == 0) continue;
      const double p = static_cast<double>(c) / static_cast<double>(cluster.objects().size());
      entropy -= p * std::log(p);
    }
    entropy_sum += static_cast<double>(cluster.objects().size()) * entropy;
    total += cluster.objects().size();
  }
  const double mean_entropy = entropy_sum / static_cast<double>(total);
  return 1.0 - mean_entropy / std::log(static_cast<double>(label_count));
}

std::vector<std::pair<std::size_t, double>> eval_per_cluster(PerClusterMeasure measure,
                                                             const Clustering& found,
                                                             const Clustering& ref,
                                                             const Dataset& data) {
  check_refs(found, ref, data);
  std::vector<std::pair<std::size_t, double>> out;
  switch (measure) {
    case PerClusterMeasure::F1P:
      require_reference(ref);
      for (std::size_t i = 0; i < found.size(); ++i) {
        double best = 0.0;
        for (const auto& other : ref.clusters())
          best = std::max(best, object_f1(found[i], other));
        out.emplace_back(i, best);
      }
      break;
    case PerClusterMeasure::F1R:
      require_reference(ref);
      for (std::size_t j = 0; j < ref.size(); ++j) {
        double best = 0.0;
        for (const auto& other : found.clusters())
          best = std::max(best, object_f1(ref[j], other));
        out.emplace_back(j, best);
      }
      break;
    case PerClusterMeasure::E4SC:
      for (std::size_t i = 0; i < found.size(); ++i) {
        double best = 0.0;
        for (const auto& other : ref.clusters())
          best = std::max(best, micro_f1(found[i], other));
        out.emplace_back(i, best);
      }
      break;
  }
  return out;
}

MeasureFn measure_by_name(const std::string& name) {
  if (name == "rnia") return &eval_rnia;
  if (name == "ce") return &eval_ce;
  if (name == "f1p") return &eval_f1p;
  if (name == "f1r") return &eval_f1r;
  if (name == "e4sc") return &eval_e4sc;
  if (name == "entropy") return &eval_entropy;
  return nullptr;
}

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> names{"ce", "rnia", "entropy",
                                              "f1p", "f1r", "e4sc"};
  return names;
}

}  // namespace subspace
