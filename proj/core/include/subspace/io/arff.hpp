#pragma once

#include <filesystem>

#include "subspace/dataset.hpp"

namespace subspace::io {

// Reads the numeric subset of the ARFF format: @relation, numeric/real/
// integer attributes, dense @data rows. A trailing nominal attribute named
// "class" (case-insensitive) is accepted but skipped; its column is dropped
// from the data. The relation name becomes the dataset's source label.
Dataset read_arff(const std::filesystem::path& path);

}  // namespace subspace::io
