#include "subspace/viz/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "subspace/errors.hpp"
#include "subspace/format.hpp"

namespace subspace::viz {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Whole-file write, then rename into place.
void write_file(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary);
    if (!file) throw IoError("cannot write " + tmp.string());
    file << content;
    if (!file) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string());
}

constexpr std::size_t kNoCluster = static_cast<std::size_t>(-1);

// Lowest cluster index containing each object.
std::vector<std::size_t> primary_clusters(const Dataset& data,
                                          const Clustering& clustering) {
  std::vector<std::size_t> primary(data.size(), kNoCluster);
  for (std::size_t i = clustering.size(); i-- > 0;)
    for (std::size_t obj : clustering[i].objects()) primary[obj] = i;
  return primary;
}

}  // namespace

void emit_colored_table(const Dataset& data, const Clustering& clustering,
                        const std::vector<Rgb>& palette,
                        const std::filesystem::path& out, bool include_unclustered) {
  const auto primary = primary_clusters(data, clustering);

  std::vector<std::size_t> clustered, unclustered;
  for (std::size_t obj = 0; obj < data.size(); ++obj)
    (primary[obj] == kNoCluster ? unclustered : clustered).push_back(obj);
  std::stable_sort(clustered.begin(), clustered.end(),
                   [&](std::size_t a, std::size_t b) { return primary[a] < primary[b]; });

  std::ostringstream html;
  html << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
       << "<title>clustering report</title>\n<style>\n"
       << "body{font-family:sans-serif;margin:16px;}\n"
       << "table{border-collapse:collapse;}\n"
       << "td,th{border:1px solid #999;padding:2px 8px;font-size:13px;text-align:right;}\n"
       << "th{background:#eee;}\n"
       << ".bar{display:inline-block;width:6px;height:12px;margin-left:5px;"
          "vertical-align:middle;}\n"
       << ".also{text-align:left;color:#444;}\n"
       << ".noise td{background:#e0e0e0;color:#555;}\n"
       << "</style>\n</head>\n<body>\n"
       << "<h1>clustering report</h1>\n"
       << "<p>n=" << data.size() << " d=" << data.dims() << " clusters="
       << clustering.size() << "</p>\n";

  if (clustering.empty()) html << "<p class=\"notice\">no clusters</p>\n";

  if (!clustering.empty() || (include_unclustered && !unclustered.empty())) {
    html << "<table>\n<thead>\n<tr><th>object</th>";
    for (const auto& name : data.dim_names()) html << "<th>" << escape(name) << "</th>";
    html << "<th>also in</th></tr>\n</thead>\n<tbody>\n";

    for (std::size_t obj : clustered) {
      const std::size_t c = primary[obj];
      const Rgb color = cluster_color(c, palette);
      const auto& dims = clustering[c].dims();
      html << "<tr class=\"c" << c << "\" style=\"background:" << color.rgba(0.25)
           << "\"><td>" << obj << "</td>";
      for (std::size_t j = 0; j < data.dims(); ++j) {
        html << "<td>" << format_double(data.value(obj, j));
        if (std::binary_search(dims.begin(), dims.end(), j))
          html << "<span class=\"bar\" style=\"background:" << color.hex()
               << "\"></span>";
        html << "</td>";
      }
      html << "<td class=\"also\">";
      bool first = true;
      for (std::size_t i = c + 1; i < clustering.size(); ++i) {
        if (!std::binary_search(clustering[i].objects().begin(),
                                clustering[i].objects().end(), obj))
          continue;
        if (!first) html << ", ";
        html << i;
        first = false;
      }
      html << "</td></tr>\n";
    }

    if (include_unclustered) {
      for (std::size_t obj : unclustered) {
        html << "<tr class=\"noise\"><td>" << obj << "</td>";
        for (std::size_t j = 0; j < data.dims(); ++j)
          html << "<td>" << format_double(data.value(obj, j)) << "</td>";
        html << "<td class=\"also\"></td></tr>\n";
      }
    }
    html << "</tbody>\n</table>\n";
  }

  html << "</body>\n</html>\n";
  write_file(out, html.str());
}

void emit_subspace_matrix(const Clustering& clustering,
                          const std::vector<std::string>& dim_names,
                          const std::vector<Rgb>& palette,
                          const std::filesystem::path& out) {
  const std::size_t d = clustering.d_ref();
  if (dim_names.size() != d)
    throw IoError("dimension name list has " + std::to_string(dim_names.size()) +
                  " entries, clustering references d=" + std::to_string(d));

  constexpr int cell = 22;
  constexpr int label_width = 150;
  constexpr int header_height = 70;
  const int width = label_width + cell * static_cast<int>(d) + 10;
  const int height = header_height + cell * static_cast<int>(clustering.size()) + 10;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";

  for (std::size_t j = 0; j < d; ++j) {
    const int x = label_width + static_cast<int>(j) * cell + cell / 2;
    svg << "<text x=\"" << x << "\" y=\"" << header_height - 8
        << "\" text-anchor=\"start\" transform=\"rotate(-45 " << x << " "
        << header_height - 8 << ")\">" << escape(dim_names[j]) << "</text>\n";
  }

  for (std::size_t i = 0; i < clustering.size(); ++i) {
    const int y = header_height + static_cast<int>(i) * cell;
    svg << "<text x=\"4\" y=\"" << y + cell - 7 << "\">cluster " << i << " ("
        << clustering[i].objects().size() << ")</text>\n";
    const Rgb color = cluster_color(i, palette);
    for (std::size_t j = 0; j < d; ++j) {
      const bool filled = std::binary_search(clustering[i].dims().begin(),
                                             clustering[i].dims().end(), j);
      svg << "<rect x=\"" << label_width + static_cast<int>(j) * cell << "\" y=\"" << y
          << "\" width=\"" << cell - 2 << "\" height=\"" << cell - 2 << "\" fill=\""
          << (filled ? color.hex() : "#ffffff") << "\" stroke=\"#999999\"/>\n";
    }
  }
  svg << "</svg>\n";

  std::ostringstream html;
  html << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
       << "<title>subspace matrix</title>\n</head>\n<body>\n"
       << svg.str() << "</body>\n</html>\n";

  // A .svg target gets the bare SVG, anything else the wrapping document.
  if (out.extension() == ".svg")
    write_file(out, svg.str());
  else
    write_file(out, html.str());
}

}  // namespace subspace::viz
