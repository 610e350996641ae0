#include "subspace/viz/palette.hpp"

#include <cstdio>

#include "subspace/errors.hpp"

namespace subspace::viz {

std::string Rgb::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string Rgb::rgba(double alpha) const {
  char buf[40];
  std::snprintf(buf, sizeof buf, "rgba(%u,%u,%u,%.2f)", r, g, b, alpha);
  return buf;
}

const std::array<Rgb, 12>& default_palette() {
  static const std::array<Rgb, 12> palette{{
      {0x1f, 0x77, 0xb4},  // blue
      {0x2c, 0xa0, 0x2c},  // green
      {0xd6, 0x27, 0x28},  // red
      {0xff, 0x7f, 0x0e},  // orange
      {0x94, 0x67, 0xbd},  // purple
      {0x8c, 0x56, 0x4b},  // brown
      {0xe3, 0x77, 0xc2},  // pink
      {0x7f, 0x7f, 0x7f},  // gray
      {0xbc, 0xbd, 0x22},  // olive
      {0x17, 0xbe, 0xcf},  // cyan
      {0xaa, 0x40, 0x99},  // magenta
      {0x25, 0x59, 0x31},  // dark green
  }};
  return palette;
}

Rgb cluster_color(std::size_t cluster_index, const std::vector<Rgb>& palette) {
  if (!palette.empty()) return palette[cluster_index % palette.size()];
  const auto& fallback = default_palette();
  return fallback[cluster_index % fallback.size()];
}

Rgb parse_hex_color(const std::string& text) {
  auto bad = [&] { throw UsageError("bad color '" + text + "', expected #rrggbb"); };
  if (text.size() != 7 || text[0] != '#') bad();
  unsigned value = 0;
  for (std::size_t i = 1; i < 7; ++i) {
    const char c = text[i];
    unsigned digit = 0;
    if (c >= '0' && c <= '9')
      digit = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      digit = static_cast<unsigned>(c - 'a') + 10;
    else if (c >= 'A' && c <= 'F')
      digit = static_cast<unsigned>(c - 'A') + 10;
    else
      bad();
    value = value * 16 + digit;
  }
  return Rgb{static_cast<std::uint8_t>(value >> 16), static_cast<std::uint8_t>(value >> 8),
             static_cast<std::uint8_t>(value)};
}

}  // namespace subspace::viz
