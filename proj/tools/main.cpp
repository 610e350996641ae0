// subspace - command line front end for the subspace clustering toolkit.
//
// Subcommands: generate, cluster, evaluate, visualize, pipeline.
// Exit codes: 0 success, 1 runtime/IO failure, 2 usage/validation failure.
// Diagnostics go to stderr, results to stdout, machine-readable output only
// to files. Seed priority: --seed, then config/spec seed, then the
// SUBSPACE_KIT_SEED environment variable, then the built-in default 42.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subspace/algo/clique.hpp"
#include "subspace/algo/doc.hpp"
#include "subspace/algo/mineclus.hpp"
#include "subspace/algo/proclus.hpp"
#include "subspace/algo/subclu.hpp"
#include "subspace/errors.hpp"
#include "subspace/eval/measures.hpp"
#include "subspace/eval/report.hpp"
#include "subspace/format.hpp"
#include "subspace/generator.hpp"
#include "subspace/io/arff.hpp"
#include "subspace/io/cluster_tables.hpp"
#include "subspace/io/csv.hpp"
#include "subspace/viz/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("SUBSPACE_KIT_SEED");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t pos = 0;
    const std::uint64_t value = std::stoull(raw, &pos);
    if (raw[pos] != '\0') throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw subspace::UsageError(std::string("SUBSPACE_KIT_SEED is not an integer: ") + raw);
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& cli,
                           const std::optional<std::uint64_t>& config) {
  if (cli) return *cli;
  if (config) return *config;
  if (auto env = env_seed()) return *env;
  return kDefaultSeed;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

subspace::Dataset load_dataset(const fs::path& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) {
    std::string ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    fmt = (ext == ".arff") ? "arff" : "csv";
  }
  if (fmt == "arff") return subspace::io::read_arff(path);
  if (fmt == "csv") return subspace::io::read_csv(path);
  throw subspace::UsageError("unknown format '" + format + "' (use arff or csv)");
}

void reject_unknown_keys(const json& object, const std::vector<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw subspace::UsageError("unknown key '" + key + "' in " + where);
  }
}

// ---------------------------------------------------------------------------
// generator spec (flat key-value JSON document)

subspace::GeneratorSpec parse_generator_spec(const json& doc,
                                             const std::optional<std::uint64_t>& cli_seed) {
  if (!doc.is_object()) throw subspace::UsageError("generator spec must be a JSON object");
  reject_unknown_keys(doc,
                      {"n_clustered", "n_noise", "d", "k", "dims_min", "dims_max",
                       "size_weights", "extent", "value_min", "value_max", "model",
                       "seed"},
                      "generator spec");

  auto require_uint = [&](const std::string& key) -> std::size_t {
    if (!doc.contains(key))
      throw subspace::UsageError("generator spec is missing '" + key + "'");
    if (!doc[key].is_number_unsigned())
      throw subspace::UsageError("generator spec field '" + key +
                                 "' must be a non-negative integer");
    return doc[key].get<std::size_t>();
  };

  subspace::GeneratorSpec spec;
  spec.n_clustered = require_uint("n_clustered");
  spec.n_noise = doc.contains("n_noise") ? require_uint("n_noise") : 0;
  spec.d = require_uint("d");
  spec.k = require_uint("k");
  spec.dims_min = require_uint("dims_min");
  spec.dims_max = require_uint("dims_max");
  if (doc.contains("size_weights")) {
    if (!doc["size_weights"].is_array())
      throw subspace::UsageError("generator spec field 'size_weights' must be an array");
    spec.size_weights = doc["size_weights"].get<std::vector<double>>();
  }
  if (doc.contains("extent")) spec.extent = doc["extent"].get<double>();
  if (doc.contains("value_min")) spec.value_range.first = doc["value_min"].get<double>();
  if (doc.contains("value_max")) spec.value_range.second = doc["value_max"].get<double>();
  if (doc.contains("model")) {
    const std::string model = doc["model"].get<std::string>();
    if (model == "uniform-box")
      spec.model = subspace::ClusterModel::UniformBox;
    else if (model == "gaussian")
      spec.model = subspace::ClusterModel::Gaussian;
    else
      throw subspace::UsageError("generator spec field 'model' must be uniform-box or gaussian");
  }
  std::optional<std::uint64_t> spec_seed;
  if (doc.contains("seed")) spec_seed = doc["seed"].get<std::uint64_t>();
  spec.seed = resolve_seed(cli_seed, spec_seed);
  return spec;
}

json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw subspace::IoError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw subspace::UsageError(path.string() + ": " + e.what());
  }
  return doc;
}

// ---------------------------------------------------------------------------
// algorithm dispatch

using ParamBag = std::map<std::string, std::string>;

double bag_double(const ParamBag& bag, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(bag.at(key), &pos);
    if (pos != bag.at(key).size()) throw std::invalid_argument(key);
    return value;
  } catch (const std::exception&) {
    throw subspace::UsageError("parameter '" + key + "' must be a number, got '" +
                               bag.at(key) + "'");
  }
}

std::size_t bag_uint(const ParamBag& bag, const std::string& key) {
  try {
    std::size_t pos = 0;
    const unsigned long long value = std::stoull(bag.at(key), &pos);
    if (pos != bag.at(key).size()) throw std::invalid_argument(key);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw subspace::UsageError("parameter '" + key + "' must be a non-negative integer, got '" +
                               bag.at(key) + "'");
  }
}

void check_params(const ParamBag& bag, const std::vector<std::string>& required,
                  const std::string& algorithm) {
  for (const auto& name : required)
    if (!bag.count(name))
      throw subspace::UsageError("algorithm '" + algorithm + "' needs parameter '" + name +
                                 "' (required: " + [&] {
                                   std::string all;
                                   for (const auto& r : required)
                                     all += (all.empty() ? "" : ", ") + r;
                                   return all;
                                 }() + ")");
  for (const auto& [key, value] : bag)
    if (std::find(required.begin(), required.end(), key) == required.end())
      throw subspace::UsageError("algorithm '" + algorithm + "' does not take parameter '" +
                                 key + "'");
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"clique", "subclu", "proclus",
                                              "doc",    "fastdoc", "mineclus"};
  return names;
}

subspace::Clustering run_algorithm(const std::string& algorithm,
                                   const subspace::Dataset& data, const ParamBag& bag,
                                   std::uint64_t seed) {
  if (algorithm == "clique") {
    check_params(bag, {"xi", "tau"}, algorithm);
    return subspace::run_clique(
        data, subspace::CliqueParams(static_cast<int>(bag_uint(bag, "xi")),
                                     bag_double(bag, "tau")));
  }
  if (algorithm == "subclu") {
    check_params(bag, {"eps", "min_pts"}, algorithm);
    return subspace::run_subclu(
        data, subspace::SubcluParams(bag_double(bag, "eps"), bag_uint(bag, "min_pts")));
  }
  if (algorithm == "proclus") {
    check_params(bag, {"k", "l"}, algorithm);
    return subspace::run_proclus(
        data, subspace::ProclusParams(bag_uint(bag, "k"), bag_uint(bag, "l"), seed));
  }
  if (algorithm == "doc") {
    check_params(bag, {"alpha", "beta", "w", "max_clusters"}, algorithm);
    return subspace::run_doc(
        data, subspace::DocParams(bag_double(bag, "alpha"), bag_double(bag, "beta"),
                                  bag_double(bag, "w"), bag_uint(bag, "max_clusters"), seed));
  }
  if (algorithm == "fastdoc") {
    check_params(bag, {"alpha", "beta", "w", "max_clusters", "d0"}, algorithm);
    return subspace::run_fastdoc(
        data,
        subspace::FastDocParams(bag_double(bag, "alpha"), bag_double(bag, "beta"),
                                bag_double(bag, "w"), bag_uint(bag, "max_clusters"),
                                bag_uint(bag, "d0"), seed));
  }
  if (algorithm == "mineclus") {
    check_params(bag, {"alpha", "beta", "w", "max_clusters"}, algorithm);
    return subspace::run_mineclus(
        data, subspace::MineclusParams(bag_double(bag, "alpha"), bag_double(bag, "beta"),
                                       bag_double(bag, "w"), bag_uint(bag, "max_clusters"),
                                       seed));
  }
  std::string all;
  for (const auto& name : algorithm_names()) all += (all.empty() ? "" : ", ") + name;
  throw subspace::UsageError("unknown algorithm '" + algorithm + "' (available: " + all + ")");
}

void print_cluster_summary(std::ostream& out, const subspace::Clustering& clustering) {
  for (std::size_t i = 0; i < clustering.size(); ++i) {
    out << "cluster " << i << ": " << clustering[i].objects().size() << " objects, dims {";
    const auto& dims = clustering[i].dims();
    for (std::size_t j = 0; j < dims.size(); ++j) {
      if (j) out << ", ";
      out << dims[j];
    }
    out << "}\n";
  }
}

// ---------------------------------------------------------------------------
// subcommands

struct GenerateArgs {
  std::string spec_path, out_path, truth_path;
  std::optional<std::uint64_t> seed;
};

int cmd_generate(const GenerateArgs& args) {
  const auto spec = parse_generator_spec(load_json(args.spec_path), args.seed);
  const auto [data, truth] = subspace::generate(spec);
  subspace::io::write_csv(data, args.out_path);
  subspace::io::write_clu(truth, args.truth_path);
  std::cout << "n=" << data.size() << " d=" << data.dims() << " k=" << truth.size()
            << "\n";
  return 0;
}

struct ClusterArgs {
  std::string algorithm, in_path, format, out_path, tables_prefix;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;
  bool maximal_only = false;
};

// Keeps only clusters whose subspace is not a strict subset of another
// result cluster's subspace.
subspace::Clustering maximal_subspaces_only(const subspace::Clustering& clustering) {
  std::vector<subspace::SubspaceCluster> kept;
  for (std::size_t i = 0; i < clustering.size(); ++i) {
    const auto& dims = clustering[i].dims();
    bool dominated = false;
    for (std::size_t j = 0; j < clustering.size() && !dominated; ++j) {
      const auto& other = clustering[j].dims();
      dominated = other.size() > dims.size() &&
                  std::includes(other.begin(), other.end(), dims.begin(), dims.end());
    }
    if (!dominated) kept.push_back(clustering[i]);
  }
  return subspace::Clustering(std::move(kept), clustering.n_ref(), clustering.d_ref());
}

int cmd_cluster(const ClusterArgs& args) {
  ParamBag bag;
  for (const auto& raw : args.params) {
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos || eq == 0)
      throw subspace::UsageError("--param expects key=value, got '" + raw + "'");
    bag[raw.substr(0, eq)] = raw.substr(eq + 1);
  }
  const auto data = load_dataset(args.in_path, args.format);
  const std::uint64_t seed = resolve_seed(args.seed, std::nullopt);
  auto result = run_algorithm(args.algorithm, data, bag, seed);
  if (args.maximal_only) result = maximal_subspaces_only(result);

  subspace::io::write_clu(result, args.out_path);
  if (!args.tables_prefix.empty())
    subspace::io::write_cluster_tables(result, args.tables_prefix + "_dims.csv",
                                       args.tables_prefix + "_objects.csv",
                                       data.dim_names());
  print_cluster_summary(std::cout, result);
  return 0;
}

struct EvaluateArgs {
  std::string found_path, truth_path, compare_path, data_path, format, measures;
  std::string csv_path;
  bool per_cluster = false;
};

subspace::Clustering load_clu_checked(const fs::path& path, const subspace::Dataset& data) {
  try {
    return subspace::io::read_clu(path, data.size(), data.dims());
  } catch (const subspace::FormatError&) {
    if (auto d = subspace::io::infer_clu_dims(path); d && *d != data.dims())
      throw subspace::DimensionMismatch(path.string() + " declares d=" + std::to_string(*d) +
                                        ", dataset has d=" + std::to_string(data.dims()));
    throw;
  }
}

int cmd_evaluate(const EvaluateArgs& args) {
  if (args.truth_path.empty() == args.compare_path.empty())
    throw subspace::UsageError("exactly one of --truth or --compare is required");
  const auto data = load_dataset(args.data_path, args.format);
  const auto found = load_clu_checked(args.found_path, data);
  const auto reference = load_clu_checked(
      args.truth_path.empty() ? args.compare_path : args.truth_path, data);

  const auto names = split_list(args.measures);
  const auto report =
      subspace::evaluate_measures(names, found, reference, data, args.per_cluster);

  for (const auto& warning : report.warnings) std::cerr << "warning: " << warning << "\n";
  for (const auto& line : report.lines()) std::cout << line << "\n";

  if (!args.csv_path.empty()) {
    const bool fresh = !fs::exists(args.csv_path) || fs::file_size(args.csv_path) == 0;
    std::ofstream csv(args.csv_path, std::ios::app | std::ios::binary);
    if (!csv) throw subspace::IoError("cannot write " + args.csv_path);
    if (fresh) csv << report.csv_header() << "\n";
    csv << report.csv_row() << "\n";
  }
  return 0;
}

struct VisualizeArgs {
  std::string data_path, clusters_path, format, html_path, matrix_path, palette;
  bool no_unclustered = false;
};

std::vector<subspace::viz::Rgb> parse_palette(const std::string& text) {
  std::vector<subspace::viz::Rgb> palette;
  if (text.empty()) return palette;
  for (const auto& token : split_list(text))
    palette.push_back(subspace::viz::parse_hex_color(token));
  return palette;
}

int cmd_visualize(const VisualizeArgs& args) {
  if (args.html_path.empty() && args.matrix_path.empty())
    throw subspace::UsageError("at least one of --html or --matrix is required");
  const auto data = load_dataset(args.data_path, args.format);
  const auto clustering = load_clu_checked(args.clusters_path, data);
  const auto palette = parse_palette(args.palette);

  if (!args.html_path.empty())
    subspace::viz::emit_colored_table(data, clustering, palette, args.html_path,
                                      !args.no_unclustered);
  if (!args.matrix_path.empty())
    subspace::viz::emit_subspace_matrix(clustering, data.dim_names(), palette,
                                        args.matrix_path);
  return 0;
}

struct PipelineArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
};

// Schema pass over the whole document; rejects unknown keys and shape
// violations before anything executes. The same schema ships as
// docs/pipeline.schema.json.
void validate_pipeline_config(const json& config) {
  if (!config.is_object()) throw subspace::UsageError("pipeline config must be a JSON object");
  reject_unknown_keys(config, {"source", "truth", "steps", "measures", "outputs", "seed"},
                      "pipeline config");
  if (!config.contains("source")) throw subspace::UsageError("pipeline config needs 'source'");
  if (!config.contains("steps") || !config["steps"].is_array() || config["steps"].empty())
    throw subspace::UsageError("pipeline config needs a non-empty 'steps' array");

  const json& source = config["source"];
  if (!source.is_object())
    throw subspace::UsageError("pipeline source must be a JSON object");
  reject_unknown_keys(source, {"file", "format", "generator"}, "pipeline source");
  if (source.contains("file") == source.contains("generator"))
    throw subspace::UsageError("pipeline source needs exactly one of 'file' or 'generator'");

  std::size_t step_index = 0;
  for (const auto& step : config["steps"]) {
    ++step_index;
    if (!step.is_object())
      throw subspace::UsageError("step " + std::to_string(step_index) +
                                 " must be a JSON object");
    reject_unknown_keys(step, {"algorithm", "params", "seed"},
                        "step " + std::to_string(step_index));
    if (!step.contains("algorithm"))
      throw subspace::UsageError("step " + std::to_string(step_index) +
                                 " needs 'algorithm'");
    const std::string algorithm = step["algorithm"].get<std::string>();
    if (std::find(algorithm_names().begin(), algorithm_names().end(), algorithm) ==
        algorithm_names().end())
      throw subspace::UsageError("unknown algorithm '" + algorithm + "' in step " +
                                 std::to_string(step_index));
  }

  if (config.contains("measures")) {
    for (const auto& name : config["measures"].get<std::vector<std::string>>())
      if (!subspace::measure_by_name(name))
        throw subspace::UsageError("unknown measure '" + name + "' in pipeline config");
    if (!config["measures"].empty() && source.contains("file") && !config.contains("truth"))
      throw subspace::UsageError("truth required: file sources need a 'truth' path "
                                 "when measures are requested");
  }

  if (config.contains("outputs")) {
    reject_unknown_keys(config["outputs"], {"clusters", "report", "html", "matrix"},
                        "pipeline outputs");
  }
}

int cmd_pipeline(const PipelineArgs& args) {
  const json config = load_json(args.config_path);
  validate_pipeline_config(config);

  std::optional<std::uint64_t> config_seed;
  if (config.contains("seed")) config_seed = config["seed"].get<std::uint64_t>();
  const std::uint64_t seed = resolve_seed(args.seed, config_seed);

  std::vector<std::string> measures;
  if (config.contains("measures")) measures = config["measures"].get<std::vector<std::string>>();

  const json& source = config["source"];
  std::optional<subspace::Dataset> data;
  std::optional<subspace::Clustering> truth;
  std::ostringstream report_block;

  if (source.contains("generator")) {
    const auto spec = parse_generator_spec(source["generator"], seed);
    auto [generated, ground_truth] = subspace::generate(spec);
    report_block << "source: generated (n=" << generated.size() << " d="
                 << generated.dims() << " k=" << ground_truth.size() << ")\n";
    data = std::move(generated);
    truth = std::move(ground_truth);
  } else {
    const std::string file = source["file"].get<std::string>();
    const std::string format =
        source.contains("format") ? source["format"].get<std::string>() : "";
    data = load_dataset(file, format);
    report_block << "source: file " << file << " (n=" << data->size() << " d="
                 << data->dims() << ")\n";
  }
  if (config.contains("truth"))
    truth = load_clu_checked(config["truth"].get<std::string>(), *data);

  // Steps run in order; measures always score the last step's result.
  std::optional<subspace::Clustering> result;
  std::size_t step_index = 0;
  for (const auto& step : config["steps"]) {
    ++step_index;
    const std::string algorithm = step["algorithm"].get<std::string>();
    ParamBag bag;
    if (step.contains("params")) {
      for (const auto& [key, value] : step["params"].items()) {
        if (value.is_string())
          bag[key] = value.get<std::string>();
        else
          bag[key] = value.dump();
      }
    }
    const std::uint64_t step_seed =
        step.contains("seed") ? step["seed"].get<std::uint64_t>() : seed;
    result = run_algorithm(algorithm, *data, bag, step_seed);
    report_block << "step " << step_index << ": " << algorithm << " -> " << result->size()
                 << " clusters\n";
  }

  std::ostringstream summary;
  print_cluster_summary(summary, *result);
  report_block << summary.str();

  std::vector<std::string> measure_lines;
  if (!measures.empty()) {
    if (!truth)
      throw subspace::UsageError("truth required: measures requested without ground truth");
    const auto report = subspace::evaluate_measures(measures, *result, *truth, *data);
    for (const auto& warning : report.warnings)
      std::cerr << "warning: " << warning << "\n";
    measure_lines = report.lines();
    for (const auto& line : measure_lines) report_block << line << "\n";
  }

  std::cout << report_block.str();

  if (config.contains("outputs")) {
    const json& outputs = config["outputs"];
    if (outputs.contains("clusters"))
      subspace::io::write_clu(*result, outputs["clusters"].get<std::string>());
    if (outputs.contains("report")) {
      std::ofstream file(outputs["report"].get<std::string>(), std::ios::binary);
      if (!file) throw subspace::IoError("cannot write report file");
      for (const auto& line : measure_lines) file << line << "\n";
    }
    if (outputs.contains("html"))
      subspace::viz::emit_colored_table(*data, *result, {},
                                        outputs["html"].get<std::string>());
    if (outputs.contains("matrix"))
      subspace::viz::emit_subspace_matrix(*result, data->dim_names(), {},
                                          outputs["matrix"].get<std::string>());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subspace clustering toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "generate synthetic data with ground truth");
  generate->add_option("--spec", gen.spec_path, "generator spec (JSON)")->required();
  generate->add_option("--out", gen.out_path, "output dataset CSV")->required();
  generate->add_option("--truth", gen.truth_path, "output ground truth .clu")->required();
  generate->add_option("--seed", gen.seed, "seed override");

  ClusterArgs clu;
  auto* cluster = app.add_subcommand("cluster", "run a subspace clustering algorithm");
  cluster->add_option("--algo", clu.algorithm, "algorithm name")->required();
  cluster->add_option("--param", clu.params, "algorithm parameter key=value")
      ->take_all();
  cluster->add_option("--in", clu.in_path, "input dataset")->required();
  cluster->add_option("--format", clu.format, "input format (arff|csv)");
  cluster->add_option("--out", clu.out_path, "output clustering .clu")->required();
  cluster->add_option("--tables", clu.tables_prefix,
                      "also write <prefix>_dims.csv and <prefix>_objects.csv");
  cluster->add_option("--seed", clu.seed, "seed override");
  cluster->add_flag("--maximal-only", clu.maximal_only,
                    "drop clusters whose subspace is a strict subset of another's");

  EvaluateArgs eva;
  auto* evaluate = app.add_subcommand("evaluate", "score a clustering against a reference");
  evaluate->add_option("--found", eva.found_path, "found clustering .clu")->required();
  evaluate->add_option("--truth", eva.truth_path, "reference clustering .clu");
  evaluate->add_option("--compare", eva.compare_path,
                       "second found clustering .clu (instead of --truth)");
  evaluate->add_option("--data", eva.data_path, "dataset both clusterings refer to")
      ->required();
  evaluate->add_option("--format", eva.format, "dataset format (arff|csv)");
  evaluate->add_option("--measure", eva.measures, "comma-separated measure list")
      ->required();
  evaluate->add_flag("--per-cluster", eva.per_cluster, "add per-cluster result lines");
  evaluate->add_option("--csv", eva.csv_path, "append one row to this sweep CSV");

  VisualizeArgs vis;
  auto* visualize = app.add_subcommand("visualize", "emit static reports");
  visualize->add_option("--data", vis.data_path, "dataset")->required();
  visualize->add_option("--clusters", vis.clusters_path, "clustering .clu")->required();
  visualize->add_option("--format", vis.format, "dataset format (arff|csv)");
  visualize->add_option("--html", vis.html_path, "colored object table output");
  visualize->add_option("--matrix", vis.matrix_path, "cluster x dimension SVG output");
  visualize->add_option("--palette", vis.palette, "comma-separated #rrggbb color cycle");
  visualize->add_flag("--no-unclustered", vis.no_unclustered,
                      "drop the trailing unclustered section");

  PipelineArgs pipe;
  auto* pipeline = app.add_subcommand("pipeline", "run a JSON-configured pipeline");
  pipeline->add_option("--config", pipe.config_path, "pipeline config (JSON)")->required();
  pipeline->add_option("--seed", pipe.seed, "seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (cluster->parsed()) return cmd_cluster(clu);
    if (evaluate->parsed()) return cmd_evaluate(eva);
    if (visualize->parsed()) return cmd_visualize(vis);
    if (pipeline->parsed()) return cmd_pipeline(pipe);
  } catch (const subspace::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const subspace::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
