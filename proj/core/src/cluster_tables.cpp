#include "subspace/io/cluster_tables.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "subspace/errors.hpp"

namespace subspace::io {

namespace {

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

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_id(const std::string& cell, const std::string& what,
                     std::size_t line_no) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || end != cell.data() + cell.size())
    throw FormatError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                      cell + "'");
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(strip(line.substr(start)));
      break;
    }
    fields.push_back(strip(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

void write_cluster_tables(const Clustering& clustering,
                          const std::filesystem::path& dims_path,
                          const std::filesystem::path& objects_path,
                          const std::optional<std::vector<std::string>>& dim_names) {
  const std::size_t d = clustering.d_ref();
  if (dim_names && dim_names->size() != d)
    throw FormatError("dimension name list has " + std::to_string(dim_names->size()) +
                      " entries, clustering references d=" + std::to_string(d));

  std::ostringstream dims;
  dims << "ClusterID";
  for (std::size_t j = 0; j < d; ++j)
    dims << ',' << (dim_names ? (*dim_names)[j] : "dim_" + std::to_string(j));
  dims << '\n';
  for (std::size_t i = 0; i < clustering.size(); ++i) {
    dims << i;
    std::vector<char> flags(d, '0');
    for (std::size_t dim : clustering[i].dims()) flags[dim] = '1';
    for (char f : flags) dims << ',' << f;
    dims << '\n';
  }

  std::ostringstream objects;
  objects << "ObjectID,ClusterID\n";
  for (std::size_t i = 0; i < clustering.size(); ++i)
    for (std::size_t obj : clustering[i].objects()) objects << obj << ',' << i << '\n';

  write_file(dims_path, dims.str());
  write_file(objects_path, objects.str());
}

Clustering read_cluster_tables(const std::filesystem::path& dims_path,
                               const std::filesystem::path& objects_path,
                               std::size_t n, std::size_t d) {
  std::ifstream dims_in(dims_path);
  if (!dims_in) throw IoError("cannot open " + dims_path.string());
  std::ifstream objects_in(objects_path);
  if (!objects_in) throw IoError("cannot open " + objects_path.string());

  std::map<std::size_t, std::vector<std::size_t>> cluster_dims;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(dims_in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv(line);
    if (fields.size() != d + 1)
      throw FormatError(dims_path.string() + " line " + std::to_string(line_no) +
                        ": expected 1+" + std::to_string(d) + " fields, got " +
                        std::to_string(fields.size()));
    const std::size_t id = parse_id(fields[0], "cluster id", line_no);
    std::vector<std::size_t> rel;
    for (std::size_t j = 0; j < d; ++j) {
      if (fields[j + 1] == "1")
        rel.push_back(j);
      else if (fields[j + 1] != "0")
        throw FormatError(dims_path.string() + " line " + std::to_string(line_no) +
                          ": flag '" + fields[j + 1] + "' is not 0/1");
    }
    if (rel.empty())
      throw FormatError(dims_path.string() + " line " + std::to_string(line_no) +
                        ": cluster " + std::to_string(id) + " has no relevant dimensions");
    if (!cluster_dims.emplace(id, std::move(rel)).second)
      throw FormatError(dims_path.string() + ": duplicate cluster id " + std::to_string(id));
  }

  std::map<std::size_t, std::vector<std::size_t>> cluster_objects;
  line_no = 0;
  header = true;
  while (std::getline(objects_in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv(line);
    if (fields.size() != 2)
      throw FormatError(objects_path.string() + " line " + std::to_string(line_no) +
                        ": expected 2 fields, got " + std::to_string(fields.size()));
    const std::size_t obj = parse_id(fields[0], "object id", line_no);
    const std::size_t id = parse_id(fields[1], "cluster id", line_no);
    if (obj >= n)
      throw IdOutOfRange(objects_path.string() + " line " + std::to_string(line_no) +
                         ": object id " + std::to_string(obj) + " (n=" +
                         std::to_string(n) + ")");
    if (!cluster_dims.count(id))
      throw DanglingClusterId("cluster id " + std::to_string(id) +
                              " appears in the objects table only");
    cluster_objects[id].push_back(obj);
  }

  for (const auto& [id, dims] : cluster_dims)
    if (!cluster_objects.count(id))
      throw DanglingClusterId("cluster id " + std::to_string(id) +
                              " appears in the dims table only");

  std::vector<SubspaceCluster> clusters;
  for (auto& [id, dims] : cluster_dims)
    clusters.emplace_back(std::move(cluster_objects[id]), std::move(dims));
  return Clustering(std::move(clusters), n, d);
}

void write_clu(const Clustering& clustering, const std::filesystem::path& path) {
  std::ostringstream out;
  const std::size_t d = clustering.d_ref();
  for (const auto& cluster : clustering.clusters()) {
    std::vector<char> flags(d, '0');
    for (std::size_t dim : cluster.dims()) flags[dim] = '1';
    for (std::size_t j = 0; j < d; ++j) {
      if (j) out << ' ';
      out << flags[j];
    }
    out << ' ' << cluster.objects().size();
    for (std::size_t obj : cluster.objects()) out << ' ' << obj;
    out << '\n';
  }
  write_file(path, out.str());
}

namespace {

std::vector<std::size_t> tokenize_clu_line(const std::string& line,
                                           std::size_t line_no) {
  std::vector<std::size_t> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(parse_id(tok, "token", line_no));
  return tokens;
}

}  // namespace

Clustering read_clu(const std::filesystem::path& path, std::size_t n, std::size_t d) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<SubspaceCluster> clusters;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    auto tokens = tokenize_clu_line(line, line_no);
    if (tokens.size() < d + 2)
      throw FormatError(path.string() + " line " + std::to_string(line_no) +
                        ": expected at least " + std::to_string(d + 2) +
                        " tokens for d=" + std::to_string(d));
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < d; ++j) {
      if (tokens[j] == 1)
        dims.push_back(j);
      else if (tokens[j] != 0)
        throw FormatError(path.string() + " line " + std::to_string(line_no) +
                          ": flag " + std::to_string(tokens[j]) + " is not 0/1");
    }
    const std::size_t count = tokens[d];
    if (tokens.size() != d + 1 + count)
      throw FormatError(path.string() + " line " + std::to_string(line_no) +
                        ": object count " + std::to_string(count) + " does not match " +
                        std::to_string(tokens.size() - d - 1) + " listed ids");
    std::vector<std::size_t> objects(tokens.begin() + static_cast<std::ptrdiff_t>(d) + 1,
                                     tokens.end());
    for (std::size_t obj : objects)
      if (obj >= n)
        throw IdOutOfRange(path.string() + " line " + std::to_string(line_no) +
                           ": object id " + std::to_string(obj) + " (n=" +
                           std::to_string(n) + ")");
    clusters.emplace_back(std::move(objects), std::move(dims));
  }
  return Clustering(std::move(clusters), n, d);
}

std::optional<std::size_t> infer_clu_dims(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    std::vector<std::size_t> tokens;
    try {
      tokens = tokenize_clu_line(line, 0);
    } catch (const FormatError&) {
      return std::nullopt;
    }
    // The unique split where a 0/1 flag prefix is followed by a matching
    // object count.
    std::optional<std::size_t> found;
    for (std::size_t dd = 0; dd < tokens.size(); ++dd) {
      if (tokens[dd] != tokens.size() - dd - 1 || tokens[dd] == 0) continue;
      bool flags_ok = true;
      for (std::size_t j = 0; j < dd; ++j)
        if (tokens[j] > 1) flags_ok = false;
      if (!flags_ok) continue;
      if (found) return std::nullopt;  // ambiguous
      found = dd;
    }
    return found;
  }
  return std::nullopt;
}

}  // namespace subspace::io
