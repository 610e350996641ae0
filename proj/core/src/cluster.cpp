#include "subspace/cluster.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "subspace/errors.hpp"

namespace subspace {

namespace {

void sort_unique(std::vector<std::size_t>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

}  // namespace

SubspaceCluster::SubspaceCluster(std::vector<std::size_t> objects,
                                 std::vector<std::size_t> dims)
    : objects_(std::move(objects)), dims_(std::move(dims)) {
  sort_unique(objects_);
  sort_unique(dims_);
  if (objects_.empty()) throw InvalidModel("cluster has no objects");
  if (dims_.empty()) throw InvalidModel("cluster has no relevant dimensions");
}

Clustering::Clustering(std::vector<SubspaceCluster> clusters, std::size_t n_ref,
                       std::size_t d_ref)
    : clusters_(std::move(clusters)), n_ref_(n_ref), d_ref_(d_ref) {
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    const auto& c = clusters_[i];
    if (!c.objects().empty() && c.objects().back() >= n_ref_)
      throw InvalidModel("cluster " + std::to_string(i) + " references object id " +
                         std::to_string(c.objects().back()) + " (n=" +
                         std::to_string(n_ref_) + ")");
    if (!c.dims().empty() && c.dims().back() >= d_ref_)
      throw InvalidModel("cluster " + std::to_string(i) + " references dimension id " +
                         std::to_string(c.dims().back()) + " (d=" +
                         std::to_string(d_ref_) + ")");
  }
}

std::uint64_t MicroObjectSet::pack(std::size_t obj, std::size_t dim) {
  return (static_cast<std::uint64_t>(obj) << 32) | static_cast<std::uint64_t>(dim);
}

MicroObjectSet MicroObjectSet::of_cluster(const SubspaceCluster& cluster) {
  MicroObjectSet set;
  set.keys_.reserve(cluster.objects().size() * cluster.dims().size());
  // Both id vectors are sorted, so the packed keys come out sorted.
  for (std::size_t obj : cluster.objects())
    for (std::size_t dim : cluster.dims()) set.keys_.push_back(pack(obj, dim));
  return set;
}

bool MicroObjectSet::contains(std::size_t obj, std::size_t dim) const {
  return std::binary_search(keys_.begin(), keys_.end(), pack(obj, dim));
}

std::vector<std::pair<std::size_t, std::size_t>> MicroObjectSet::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(keys_.size());
  for (std::uint64_t key : keys_)
    out.emplace_back(static_cast<std::size_t>(key >> 32),
                     static_cast<std::size_t>(key & 0xffffffffULL));
  return out;
}

void MicroObjectSet::merge(const MicroObjectSet& other) {
  std::vector<std::uint64_t> merged;
  merged.reserve(keys_.size() + other.keys_.size());
  std::merge(keys_.begin(), keys_.end(), other.keys_.begin(), other.keys_.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  keys_ = std::move(merged);
}

std::size_t MicroObjectSet::intersection_size(const MicroObjectSet& a,
                                              const MicroObjectSet& b) {
  std::size_t count = 0;
  auto ia = a.keys_.begin();
  auto ib = b.keys_.begin();
  while (ia != a.keys_.end() && ib != b.keys_.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::size_t MicroObjectSet::union_size(const MicroObjectSet& a, const MicroObjectSet& b) {
  return a.size() + b.size() - intersection_size(a, b);
}

MicroObjectSet micro_objects(const SubspaceCluster& cluster) {
  return MicroObjectSet::of_cluster(cluster);
}

MicroObjectSet clustering_micro_union(const Clustering& clustering) {
  MicroObjectSet all;
  for (const auto& cluster : clustering.clusters())
    all.merge(MicroObjectSet::of_cluster(cluster));
  return all;
}

std::size_t sorted_intersection_size(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::size_t micro_intersection_size(const SubspaceCluster& a, const SubspaceCluster& b) {
  return sorted_intersection_size(a.objects(), b.objects()) *
         sorted_intersection_size(a.dims(), b.dims());
}

}  // namespace subspace
