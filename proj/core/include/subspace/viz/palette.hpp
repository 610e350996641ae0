#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace subspace::viz {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  std::string hex() const;                  // "#rrggbb"
  std::string rgba(double alpha) const;     // "rgba(r,g,b,a)" with fixed alpha text
};

// Fixed 12-color cycle; cluster index i maps to color i mod 12. Index 0 is
// blue, index 1 green, matching the usual qualitative palettes.
const std::array<Rgb, 12>& default_palette();

Rgb cluster_color(std::size_t cluster_index, const std::vector<Rgb>& palette);

// Parses "#rrggbb"; throws UsageError on malformed input.
Rgb parse_hex_color(const std::string& text);

}  // namespace subspace::viz
