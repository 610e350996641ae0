#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subspace/cluster.hpp"

namespace subspace::io {

// Two-table exchange format for clusterings.
//
//   dims table    CSV "ClusterID,<dim names>", one row per cluster, the
//                 relevant dimensions as 1/0 flags
//   objects table CSV "ObjectID,ClusterID", one membership pair per row,
//                 sorted by (cluster id, object id)
//
// ClusterID is the 0-based position of the cluster in the result list.
// Column names default to dim_0..dim_{d-1} when none are given.
void write_cluster_tables(const Clustering& clustering,
                          const std::filesystem::path& dims_path,
                          const std::filesystem::path& objects_path,
                          const std::optional<std::vector<std::string>>& dim_names =
                              std::nullopt);

// Inverse of write_cluster_tables: clusters ordered by ClusterID. n and d
// bound the permitted ids.
Clustering read_cluster_tables(const std::filesystem::path& dims_path,
                               const std::filesystem::path& objects_path,
                               std::size_t n, std::size_t d);

// Compact one-file format, one cluster per line: d space-separated binary
// flags, the object count, then the sorted object ids.
void write_clu(const Clustering& clustering, const std::filesystem::path& path);

Clustering read_clu(const std::filesystem::path& path, std::size_t n, std::size_t d);

// Best-effort recovery of the dimension count a .clu file was written for,
// used for mismatch diagnostics. Empty when the file is empty or ambiguous.
std::optional<std::size_t> infer_clu_dims(const std::filesystem::path& path);

}  // namespace subspace::io
