#include "subspace/io/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "subspace/errors.hpp"
#include "subspace/format.hpp"

namespace subspace::io {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delimiter, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

double parse_cell(const std::string& raw, std::size_t line_no) {
  const std::string cell = strip(raw);
  double value = 0.0;
  auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || end != cell.data() + cell.size())
    throw NonNumericCell("line " + std::to_string(line_no) + ": cell '" + cell +
                         "' is not a number");
  return value;
}

}  // namespace

Dataset read_csv(const std::filesystem::path& path, bool has_header, char delimiter) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = has_header;

  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    auto fields = split(line, delimiter);
    if (header_pending) {
      for (const auto& f : fields) names.push_back(strip(f));
      header_pending = false;
      continue;
    }
    if (!names.empty() && fields.size() != names.size())
      throw RaggedRows("line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(names.size()));
    if (!rows.empty() && fields.size() != rows.front().size())
      throw RaggedRows("line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(rows.front().size()));
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_cell(f, line_no));
    rows.push_back(std::move(row));
  }

  if (names.empty()) {
    if (rows.empty()) throw MalformedCsv(path.string() + " holds no data");
    for (std::size_t j = 0; j < rows.front().size(); ++j)
      names.push_back("dim_" + std::to_string(j));
  }
  return Dataset(std::move(rows), std::move(names), path.filename().string());
}

void write_csv(const Dataset& data, const std::filesystem::path& path, char delimiter) {
  std::ostringstream out;
  for (std::size_t j = 0; j < data.dims(); ++j) {
    if (j) out << delimiter;
    out << data.dim_names()[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < data.dims(); ++j) {
      if (j) out << delimiter;
      out << format_double(data.value(i, j));
    }
    out << '\n';
  }

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary);
    if (!file) throw IoError("cannot write " + tmp.string());
    file << out.str();
    if (!file) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string());
}

}  // namespace subspace::io
