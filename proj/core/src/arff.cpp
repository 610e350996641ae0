#include "subspace/io/arff.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <unordered_set>
#include <vector>

#include "subspace/errors.hpp"

namespace subspace::io {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '\'' && s.back() == '\'') ||
                        (s.front() == '"' && s.back() == '"')))
    return s.substr(1, s.size() - 2);
  return s;
}

// Splits "@attribute name type..." into name and trailing type text. The
// name may be quoted and contain spaces.
std::pair<std::string, std::string> split_attribute(const std::string& body,
                                                    std::size_t line_no) {
  std::string text = strip(body);
  if (text.empty())
    throw MalformedArff("line " + std::to_string(line_no) + ": attribute without a name");
  std::string name;
  std::size_t pos = 0;
  if (text[0] == '\'' || text[0] == '"') {
    const char quote = text[0];
    std::size_t close = text.find(quote, 1);
    if (close == std::string::npos)
      throw MalformedArff("line " + std::to_string(line_no) + ": unterminated quote");
    name = text.substr(1, close - 1);
    pos = close + 1;
  } else {
    pos = text.find_first_of(" \t");
    if (pos == std::string::npos)
      throw MalformedArff("line " + std::to_string(line_no) + ": attribute without a type");
    name = text.substr(0, pos);
  }
  return {name, strip(text.substr(pos))};
}

struct Attribute {
  std::string name;
  bool numeric = false;  // otherwise a skipped nominal class column
};

}  // namespace

Dataset read_arff(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::string relation;
  std::vector<Attribute> attrs;
  std::unordered_set<std::string> attr_names;
  std::vector<std::vector<double>> rows;
  bool in_data = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip(line);
    if (text.empty() || text[0] == '%') continue;

    if (!in_data && text[0] == '@') {
      std::size_t space = text.find_first_of(" \t");
      const std::string keyword = lower(space == std::string::npos ? text : text.substr(0, space));
      const std::string body = space == std::string::npos ? "" : strip(text.substr(space));

      if (keyword == "@relation") {
        relation = unquote(body);
      } else if (keyword == "@attribute") {
        auto [name, type] = split_attribute(body, line_no);
        if (!attr_names.insert(name).second)
          throw MalformedArff("line " + std::to_string(line_no) +
                              ": attribute '" + name + "' declared twice");
        const std::string type_lower = lower(type);
        if (type_lower == "numeric" || type_lower == "real" || type_lower == "integer") {
          attrs.push_back({name, true});
        } else if (!type.empty() && type[0] == '{') {
          // Nominal: only tolerated as a trailing class column.
          attrs.push_back({name, false});
        } else {
          throw UnsupportedAttribute("line " + std::to_string(line_no) +
                                     ": attribute '" + name + "' has unsupported type '" +
                                     type + "'");
        }
      } else if (keyword == "@data") {
        in_data = true;
        if (attrs.empty())
          throw MalformedArff("@data before any attribute declaration");
        for (std::size_t j = 0; j < attrs.size(); ++j) {
          if (attrs[j].numeric) continue;
          if (j + 1 != attrs.size() || lower(attrs[j].name) != "class")
            throw UnsupportedAttribute("nominal attribute '" + attrs[j].name +
                                       "' is only supported as a trailing 'class' column");
        }
      } else {
        throw MalformedArff("line " + std::to_string(line_no) + ": unknown section '" +
                            keyword + "'");
      }
      continue;
    }

    if (!in_data)
      throw MalformedArff("line " + std::to_string(line_no) + ": data before @data");

    if (text[0] == '{')
      throw UnsupportedAttribute("line " + std::to_string(line_no) +
                                 ": sparse data sections are not supported");

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t pos = text.find(',', start);
      if (pos == std::string::npos) {
        fields.push_back(strip(text.substr(start)));
        break;
      }
      fields.push_back(strip(text.substr(start, pos - start)));
      start = pos + 1;
    }
    if (fields.size() != attrs.size())
      throw MalformedArff("line " + std::to_string(line_no) + " has " +
                          std::to_string(fields.size()) + " values, expected " +
                          std::to_string(attrs.size()));

    std::vector<double> row;
    for (std::size_t j = 0; j < attrs.size(); ++j) {
      if (!attrs[j].numeric) continue;  // skipped class column
      const std::string& cell = fields[j];
      if (cell == "?")
        throw MissingValue("line " + std::to_string(line_no) + ": missing value in '" +
                           attrs[j].name + "'");
      double value = 0.0;
      auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc{} || end != cell.data() + cell.size())
        throw MalformedArff("line " + std::to_string(line_no) + ": '" + cell +
                            "' is not numeric");
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }

  if (!in_data) throw MalformedArff(path.string() + ": no @data section");

  std::vector<std::string> names;
  for (const auto& a : attrs)
    if (a.numeric) names.push_back(a.name);
  if (names.empty()) throw MalformedArff(path.string() + ": no numeric attributes");

  return Dataset(std::move(rows), std::move(names),
                 relation.empty() ? std::optional<std::string>{} : relation);
}

}  // namespace subspace::io
