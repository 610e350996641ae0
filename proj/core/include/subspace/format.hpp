#pragma once

#include <string>

namespace subspace {

// Shortest decimal string that round-trips to the same double ("1" stays
// "1", "0.1" stays "0.1"). Keeps every emitted file byte-stable.
std::string format_double(double value);

// Fixed 6-decimal formatting used for measure scores.
std::string format_score(double value);

}  // namespace subspace
