#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"
#include "subspace/viz/palette.hpp"

namespace subspace::viz {

// Self-contained HTML table of the clustered objects, one row per object
// that belongs to at least one cluster, sorted by (primary cluster index,
// object id). The primary cluster is the lowest-index cluster containing
// the object; its color tints the row and a colored bar marks the value
// cells of its relevant dimensions. Extra memberships go to a trailing
// "also in" cell. With include_unclustered, the remaining objects follow
// in a gray section. No scripts, no external assets.
void emit_colored_table(const Dataset& data, const Clustering& clustering,
                        const std::vector<Rgb>& palette,
                        const std::filesystem::path& out,
                        bool include_unclustered = true);

// SVG grid of clusters (rows, labeled with id and object count) against
// dimensions (columns); a cell is filled in the cluster's color iff the
// dimension is relevant.
void emit_subspace_matrix(const Clustering& clustering,
                          const std::vector<std::string>& dim_names,
                          const std::vector<Rgb>& palette,
                          const std::filesystem::path& out);

}  // namespace subspace::viz
