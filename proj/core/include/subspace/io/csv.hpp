#pragma once

#include <filesystem>

#include "subspace/dataset.hpp"

namespace subspace::io {

// Reads a delimiter-separated numeric file. With has_header the first row
// supplies the dimension names, otherwise they are "dim_0".."dim_{d-1}".
// Fields never contain the delimiter; no quoting is applied.
Dataset read_csv(const std::filesystem::path& path, bool has_header = true,
                 char delimiter = ',');

// Writes header plus one row per object, shortest round-trip decimals,
// LF line endings.
void write_csv(const Dataset& data, const std::filesystem::path& path,
               char delimiter = ',');

}  // namespace subspace::io
