#include "subspace/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace subspace {

std::string format_double(double value) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string format_score(double value) {
  std::array<char, 64> buf;
  const int len = std::snprintf(buf.data(), buf.size(), "%.6f", value);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

}  // namespace subspace
