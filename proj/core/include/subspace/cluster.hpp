#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace subspace {

// A subspace cluster: a non-empty set of object ids paired with the
// non-empty set of dimensions in which those objects are similar. Ids are
// 0-based everywhere. Stored sorted and deduplicated, so equality is set
// equality.
class SubspaceCluster {
 public:
  SubspaceCluster(std::vector<std::size_t> objects, std::vector<std::size_t> dims);

  const std::vector<std::size_t>& objects() const { return objects_; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  bool operator==(const SubspaceCluster&) const = default;

 private:
  std::vector<std::size_t> objects_;  // sorted, unique
  std::vector<std::size_t> dims_;     // sorted, unique
};

// An ordered list of subspace clusters over a dataset with n_ref objects
// and d_ref dimensions. Clusters may overlap in objects and dimensions and
// need not cover either; exact duplicates are permitted.
class Clustering {
 public:
  Clustering(std::vector<SubspaceCluster> clusters, std::size_t n_ref, std::size_t d_ref);

  const std::vector<SubspaceCluster>& clusters() const { return clusters_; }
  std::size_t size() const { return clusters_.size(); }
  bool empty() const { return clusters_.empty(); }
  const SubspaceCluster& operator[](std::size_t i) const { return clusters_[i]; }

  std::size_t n_ref() const { return n_ref_; }
  std::size_t d_ref() const { return d_ref_; }

  bool operator==(const Clustering&) const = default;

 private:
  std::vector<SubspaceCluster> clusters_;
  std::size_t n_ref_ = 0;
  std::size_t d_ref_ = 0;
};

// A set of (object id, dimension id) pairs, the unit of credit for the
// subspace-aware measures. Pairs are packed into one 64-bit key each
// (object in the high half) and kept sorted.
class MicroObjectSet {
 public:
  MicroObjectSet() = default;

  static MicroObjectSet of_cluster(const SubspaceCluster& cluster);

  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  bool contains(std::size_t obj, std::size_t dim) const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  void merge(const MicroObjectSet& other);  // set union, in place

  static std::size_t intersection_size(const MicroObjectSet& a, const MicroObjectSet& b);
  static std::size_t union_size(const MicroObjectSet& a, const MicroObjectSet& b);

  bool operator==(const MicroObjectSet&) const = default;

 private:
  static std::uint64_t pack(std::size_t obj, std::size_t dim);

  std::vector<std::uint64_t> keys_;  // sorted, unique
};

// Exactly the Cartesian product objects x dims of the cluster.
MicroObjectSet micro_objects(const SubspaceCluster& cluster);

// Set union (no multiplicity) of all member clusters' micro-objects.
MicroObjectSet clustering_micro_union(const Clustering& clustering);

// |micro(a) ∩ micro(b)| without materializing either product:
// |O_a ∩ O_b| * |S_a ∩ S_b|.
std::size_t micro_intersection_size(const SubspaceCluster& a, const SubspaceCluster& b);

// Number of shared elements of two sorted unique id vectors.
std::size_t sorted_intersection_size(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b);

}  // namespace subspace
