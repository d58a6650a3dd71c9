// Copyright 2026 The chordgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// chordgap command-line front end. Every subcommand prints one JSON document
// on stdout (or --out); diagnostics and errors go to stderr.

#include <chordgap/chordgap.h>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csv.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using chordgap_cli::InputError;
using chordgap_cli::PointTable;

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitData = 3,
  kExitNumerical = 4,
};

struct CliError {
  int code;
  std::string field;
  std::string message;
};

[[noreturn]] void config_error(std::string field, std::string message) {
  throw CliError{kExitConfig, std::move(field), std::move(message)};
}

[[noreturn]] void data_error(std::string field, std::string message) {
  throw CliError{kExitData, std::move(field), std::move(message)};
}

void check(cg_status status, const std::string& field) {
  switch (status) {
    case CG_OK: return;
    case CG_ERR_ARGUMENT:
    case CG_ERR_PARAMETER: throw CliError{kExitConfig, field, cg_last_error()};
    case CG_ERR_DATA:
    case CG_ERR_DOMAIN: throw CliError{kExitData, field, cg_last_error()};
    case CG_ERR_NUMERICAL: throw CliError{kExitNumerical, field, cg_last_error()};
    case CG_ERR_INTERNAL: break;
  }
  throw CliError{kExitInternal, field, cg_last_error()};
}

const char* exit_kind(int code) {
  switch (code) {
    case kExitConfig: return "config";
    case kExitData: return "data";
    case kExitNumerical: return "numerical";
    default: return "internal";
  }
}

int report_error(const CliError& e) {
  json err;
  err["error"] = {{"kind", exit_kind(e.code)}, {"field", e.field}, {"message", e.message}};
  std::cerr << err.dump() << "\n";
  return e.code;
}

// ---- handles ----

struct GeneratorDeleter {
  void operator()(cg_generator* g) const { cg_generator_destroy(g); }
};
struct PointSetDeleter {
  void operator()(cg_pointset* s) const { cg_pointset_destroy(s); }
};
struct CentroidDeleter {
  void operator()(cg_centroid* c) const { cg_centroid_destroy(c); }
};
struct ClusteringDeleter {
  void operator()(cg_clustering* c) const { cg_clustering_destroy(c); }
};
struct DistributionDeleter {
  void operator()(cg_distribution* d) const { cg_distribution_destroy(d); }
};
using Generator = std::unique_ptr<cg_generator, GeneratorDeleter>;
using PointSet = std::unique_ptr<cg_pointset, PointSetDeleter>;
using Distribution = std::unique_ptr<cg_distribution, DistributionDeleter>;

Generator make_generator(const std::string& id, std::size_t dense_values) {
  std::size_t d = 0;
  check(cg_dimension_from_dense(id.c_str(), dense_values, &d), "points");
  cg_generator* g = nullptr;
  check(cg_generator_create(id.c_str(), d, &g), "generator");
  return Generator(g);
}

Generator make_generator_dim(const std::string& id, std::size_t d) {
  cg_generator* g = nullptr;
  check(cg_generator_create(id.c_str(), d, &g), "generator");
  return Generator(g);
}

std::vector<double> encode(const cg_generator* g, const std::vector<double>& dense,
                           const std::string& field) {
  std::vector<double> coords(cg_generator_coordinates(g));
  check(cg_generator_encode(g, dense.data(), dense.size(), coords.data(), coords.size()), field);
  return coords;
}

std::vector<double> decode(const cg_generator* g, const double* coords) {
  std::vector<double> dense(cg_generator_dense_size(g));
  check(cg_generator_decode(g, coords, cg_generator_coordinates(g), dense.data(), dense.size()),
        "internal");
  return dense;
}

PointSet make_pointset(const cg_generator* g, const PointTable& table) {
  const std::size_t c = cg_generator_coordinates(g);
  std::vector<double> coords;
  coords.reserve(table.rows() * c);
  for (std::size_t i = 0; i < table.rows(); ++i) {
    const std::vector<double> dense(table.values.begin() + i * table.columns,
                                    table.values.begin() + (i + 1) * table.columns);
    std::vector<double> x(c);
    const cg_status s = cg_generator_encode(g, dense.data(), dense.size(), x.data(), c);
    if (s != CG_OK) data_error("points", "row " + std::to_string(i + 1) + ": " + cg_last_error());
    double value = 0.0;
    if (cg_generator_eval(g, x.data(), c, &value) != CG_OK) {
      data_error("points", "row " + std::to_string(i + 1) + ": " + cg_last_error());
    }
    coords.insert(coords.end(), x.begin(), x.end());
  }
  cg_pointset* set = nullptr;
  check(cg_pointset_create(coords.data(), table.rows(), c,
                           table.weights.empty() ? nullptr : table.weights.data(), &set),
        "points");
  return PointSet(set);
}

PointTable load_points(const std::string& path) {
  try {
    return chordgap_cli::read_points_csv(path);
  } catch (const InputError& e) {
    data_error("points", path + ": " + e.what());
  }
}

// ---- formatting ----

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json rows_json(const cg_generator* g, const std::vector<double>& coords, std::size_t rows) {
  const std::size_t c = cg_generator_coordinates(g);
  json out = json::array();
  for (std::size_t i = 0; i < rows; ++i) out.push_back(decode(g, coords.data() + i * c));
  return out;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ';';
      s += csv_cell(v[i]);
    }
    return s;
  }
  return v.dump();
}

std::string render(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::string out = "key,value\n";
  for (const auto& [key, value] : doc.items()) {
    if (key == "meta" || value.is_object()) continue;
    if (value.is_array() && !value.empty() && value.front().is_structured()) continue;
    out += key + "," + csv_cell(value) + "\n";
  }
  return out;
}

// ---- run configuration ----

struct Common {
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
};

struct Params {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.5;
  cg_params get() const { return {alpha, beta, gamma}; }
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--out", common.out, "Write the result to this file instead of stdout");
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv-summary"}));
  sub->add_option("--threads", common.threads, "Worker threads")
      ->envname("CHORDGAP_THREADS")
      ->check(CLI::Range(1u, 1024u));
  sub->add_option("--config", "Re-run from a JSON config or a previous output");
}

void add_params(CLI::App* sub, Params& p, bool required) {
  auto* a = sub->add_option("--alpha", p.alpha, "alpha in [0, 1]")->check(CLI::Range(0.0, 1.0));
  auto* b = sub->add_option("--beta", p.beta, "beta in [0, 1]")->check(CLI::Range(0.0, 1.0));
  auto* g = sub->add_option("--gamma", p.gamma, "gamma between alpha and beta")
                ->check(CLI::Range(0.0, 1.0));
  if (required) {
    a->required();
    b->required();
    g->required();
  }
}

void validate_params(const Params& p) {
  double lambda = 0.0;
  const cg_params cp = p.get();
  if (cg_params_lambda(&cp, &lambda) != CG_OK) config_error("gamma", cg_last_error());
}

json params_json(const Params& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
}

std::vector<std::string> generator_choices() {
  return {"quadratic", "negentropy", "logsumexp", "gaussian_cumulant", "logdet"};
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

json meta_json(const json& config, std::optional<std::uint64_t> seed) {
  json meta;
  meta["version"] = cg_version();
  meta["seed"] = seed ? json(*seed) : json(nullptr);
  meta["config"] = config;
  return meta;
}

void emit(json doc, const json& config, std::optional<std::uint64_t> seed, const Common& common) {
  doc["meta"] = meta_json(config, seed);
  const std::string text = render(doc, common.format);
  if (common.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) data_error("out", "cannot open '" + common.out + "' for writing");
  file << text;
  if (!file) data_error("out", "write to '" + common.out + "' failed");
}

json read_json_file(const std::string& path, const std::string& field) {
  std::ifstream file(path, std::ios::binary);
  if (!file) data_error(field, "cannot open '" + path + "'");
  try {
    return json::parse(file);
  } catch (const json::exception& e) {
    data_error(field, path + ": " + e.what());
  }
}

// ---- divergence ----

struct DivergenceArgs {
  std::string generator;
  Params params;
  std::string p;
  std::string q;
  std::string points;
};

std::vector<double> resolve_point(const std::string& text, const std::string& field,
                                  const std::optional<PointTable>& table) {
  if (table) {
    std::size_t row = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), row);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      config_error(field, "expected a row index into --points, got '" + text + "'");
    }
    if (row >= table->rows()) {
      config_error(field, "row index " + text + " out of range (" +
                              std::to_string(table->rows()) + " rows)");
    }
    return {table->values.begin() + row * table->columns,
            table->values.begin() + (row + 1) * table->columns};
  }
  try {
    return chordgap_cli::parse_number_list(text);
  } catch (const std::invalid_argument& e) {
    config_error(field, e.what());
  }
}

void run_divergence(const DivergenceArgs& a, const Common& common) {
  validate_params(a.params);
  std::optional<PointTable> table;
  if (!a.points.empty()) table = load_points(a.points);
  const std::vector<double> p = resolve_point(a.p, "p", table);
  const std::vector<double> q = resolve_point(a.q, "q", table);
  if (p.size() != q.size()) config_error("q", "p and q have different lengths");

  const Generator gen = make_generator(a.generator, p.size());
  const std::vector<double> xp = encode(gen.get(), p, "p");
  const std::vector<double> xq = encode(gen.get(), q, "q");
  const cg_params params = a.params.get();
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  check(cg_chord_gap(gen.get(), xp.data(), xq.data(), xp.size(), &params, &value), "p");
  check(cg_taylor_lagrange_bounds(gen.get(), xp.data(), xq.data(), xp.size(), &params, &lower,
                                  &upper),
        "p");

  json config = {{"subcommand", "divergence"}, {"generator", a.generator}};
  config.update(params_json(a.params));
  config["p"] = a.p;
  config["q"] = a.q;
  if (!a.points.empty()) config["points"] = a.points;

  json doc;
  doc["value"] = value;
  doc["lower_bound"] = lower;
  doc["upper_bound"] = upper;
  emit(doc, config, std::nullopt, common);
}

// ---- statdist ----

struct StatdistArgs {
  std::string input;
  Params params;
};

Distribution parse_distribution(const json& spec, const std::string& field) {
  try {
    const std::string kind = spec.at("kind").get<std::string>();
    cg_distribution* d = nullptr;
    if (kind == "gaussian") {
      const auto mu = spec.at("mu").get<std::vector<double>>();
      const auto sigma = spec.at("sigma").get<std::vector<std::vector<double>>>();
      if (sigma.size() != mu.size()) data_error(field, "sigma must be a square matrix matching mu");
      std::vector<double> cov;
      for (const auto& row : sigma) {
        if (row.size() != mu.size()) data_error(field, "sigma must be a square matrix matching mu");
        cov.insert(cov.end(), row.begin(), row.end());
      }
      check(cg_distribution_gaussian(mu.data(), cov.data(), mu.size(), &d), field);
    } else if (kind == "categorical") {
      const auto p = spec.at("p").get<std::vector<double>>();
      check(cg_distribution_categorical(p.data(), p.size(), &d), field);
    } else {
      data_error(field, "unknown distribution kind '" + kind + "'");
    }
    return Distribution(d);
  } catch (const json::exception& e) {
    data_error(field, e.what());
  }
}

void run_statdist(StatdistArgs a, const CLI::App& sub, const Common& common) {
  const json input = read_json_file(a.input, "input");
  if (!input.is_object()) data_error("input", "expected a JSON object");
  for (const char* key : {"alpha", "beta", "gamma"}) {
    if (sub.count(std::string("--") + key) == 0 && input.contains(key)) {
      if (!input[key].is_number()) data_error(key, "expected a number");
      const double v = input[key].get<double>();
      if (key[0] == 'a') a.params.alpha = v;
      if (key[0] == 'b') a.params.beta = v;
      if (key[0] == 'g') a.params.gamma = v;
    }
  }
  validate_params(a.params);
  if (!input.contains("p") || !input.contains("q")) data_error("input", "expected keys p and q");
  const Distribution p = parse_distribution(input["p"], "p");
  const Distribution q = parse_distribution(input["q"], "q");

  const cg_params params = a.params.get();
  double bhat = 0.0;
  double kl_pq = 0.0;
  double kl_qp = 0.0;
  check(cg_generalized_bhattacharyya(p.get(), q.get(), &params, &bhat), "q");
  check(cg_kl(p.get(), q.get(), &kl_pq), "q");
  check(cg_kl(q.get(), p.get(), &kl_qp), "q");

  json config = {{"subcommand", "statdist"}, {"input", a.input}};
  config.update(params_json(a.params));
  json doc;
  doc["bhattacharyya"] = bhat;
  doc["kl_pq"] = kl_pq;
  doc["kl_qp"] = kl_qp;
  emit(doc, config, std::nullopt, common);
}

// ---- centroid ----

struct CentroidArgs {
  std::string generator;
  std::string points;
  Params params;
  double tol = 1e-10;
  int max_iter = 1000;
  std::string init = "gradient-mean";
};

void run_centroid(const CentroidArgs& a, const Common& common) {
  validate_params(a.params);
  const PointTable table = load_points(a.points);
  const Generator gen = make_generator(a.generator, table.columns);
  const PointSet set = make_pointset(gen.get(), table);

  cg_centroid_options options = cg_centroid_options_default();
  options.tol = a.tol;
  options.max_iter = a.max_iter;
  options.init = a.init == "first-point" ? CG_INIT_FIRST_POINT : CG_INIT_GRADIENT_MEAN;
  const cg_params params = a.params.get();
  cg_centroid* raw = nullptr;
  check(cg_solve_centroid(gen.get(), set.get(), &params, &options, &raw), "points");
  const std::unique_ptr<cg_centroid, CentroidDeleter> result(raw);

  std::vector<double> x(cg_generator_coordinates(gen.get()));
  check(cg_centroid_point(result.get(), x.data(), x.size()), "internal");
  std::vector<double> trace(cg_centroid_trace_length(result.get()));
  check(cg_centroid_trace(result.get(), trace.data(), trace.size()), "internal");

  json config = {{"subcommand", "centroid"}, {"generator", a.generator}, {"points", a.points}};
  config.update(params_json(a.params));
  config["tol"] = a.tol;
  config["max-iter"] = a.max_iter;
  config["init"] = a.init;

  json doc;
  doc["centroid"] = decode(gen.get(), x.data());
  doc["energy"] = cg_centroid_energy_value(result.get());
  doc["iterations"] = cg_centroid_iterations(result.get());
  doc["converged"] = cg_centroid_converged(result.get()) != 0;
  doc["energy_trace"] = trace;
  emit(doc, config, std::nullopt, common);
}

// ---- cluster ----

struct ClusterArgs {
  std::string generator;
  std::string points;
  Params params;
  std::size_t k = 2;
  std::optional<std::uint64_t> seed;
  int max_rounds = 100;
  int cccp_steps = 5;
  double tol = 1e-10;
  std::string orientation = "point-first";
};

void run_cluster(const ClusterArgs& a, const Common& common) {
  validate_params(a.params);
  const PointTable table = load_points(a.points);
  const Generator gen = make_generator(a.generator, table.columns);
  const PointSet set = make_pointset(gen.get(), table);
  const std::uint64_t seed = a.seed ? *a.seed : fresh_seed();

  cg_cluster_config config = cg_cluster_config_default();
  config.k = a.k;
  config.params = a.params.get();
  config.seed = seed;
  config.max_rounds = a.max_rounds;
  config.tol = a.tol;
  config.cccp_steps = a.cccp_steps;
  config.orientation = a.orientation == "center-first" ? CG_CENTER_FIRST : CG_POINT_FIRST;
  cg_clustering* raw = nullptr;
  check(cg_cluster(gen.get(), set.get(), &config, &raw), "k");
  const std::unique_ptr<cg_clustering, ClusteringDeleter> result(raw);

  const std::size_t n = table.rows();
  const std::size_t k = cg_clustering_k(result.get());
  std::vector<double> centers(k * cg_generator_coordinates(gen.get()));
  check(cg_clustering_centers(result.get(), centers.data(), centers.size()), "internal");
  std::vector<std::size_t> labels(n);
  check(cg_clustering_assignments(result.get(), labels.data(), n), "internal");
  std::vector<double> trace(cg_clustering_trace_length(result.get()));
  check(cg_clustering_trace(result.get(), trace.data(), trace.size()), "internal");
  std::vector<std::size_t> seeds(k);
  check(cg_clustering_seeds(result.get(), seeds.data(), k), "internal");

  json echo = {{"subcommand", "cluster"}, {"generator", a.generator}, {"points", a.points}};
  echo.update(params_json(a.params));
  echo["k"] = a.k;
  echo["seed"] = seed;
  echo["max-rounds"] = a.max_rounds;
  echo["cccp-steps"] = a.cccp_steps;
  echo["tol"] = a.tol;
  echo["orientation"] = a.orientation;

  json doc;
  doc["centers"] = rows_json(gen.get(), centers, k);
  doc["assignments"] = labels;
  doc["potential"] = trace.empty() ? 0.0 : trace.back();
  doc["potential_trace"] = trace;
  doc["seeds"] = seeds;
  doc["rounds"] = cg_clustering_rounds(result.get());
  doc["converged"] = cg_clustering_converged(result.get()) != 0;
  emit(doc, echo, seed, common);
}

// ---- seed-bench ----

struct BenchArgs {
  std::string input;
  std::string generator;
  Params params;
  std::size_t k = 2;
  std::size_t trials = 10000;
  std::optional<std::uint64_t> seed;
  std::size_t uv_samples = 20000;
  std::size_t bootstrap = 1000;
  double confidence = 0.95;
  double slack = 0.05;
};

template <class T>
void take(const json& spec, const CLI::App& sub, const char* flag, const char* key, T& target) {
  if (sub.count(flag) != 0 || !spec.contains(key)) return;
  try {
    target = spec.at(key).get<T>();
  } catch (const json::exception& e) {
    data_error(key, e.what());
  }
}

void run_seed_bench(BenchArgs a, const CLI::App& sub, const Common& common) {
  const json spec = read_json_file(a.input, "input");
  if (!spec.is_object()) data_error("input", "expected a JSON object");
  take(spec, sub, "--generator", "generator", a.generator);
  take(spec, sub, "--alpha", "alpha", a.params.alpha);
  take(spec, sub, "--beta", "beta", a.params.beta);
  take(spec, sub, "--gamma", "gamma", a.params.gamma);
  take(spec, sub, "--k", "k", a.k);
  take(spec, sub, "--trials", "trials", a.trials);
  take(spec, sub, "--uv-samples", "uv_samples", a.uv_samples);
  take(spec, sub, "--bootstrap", "bootstrap_resamples", a.bootstrap);
  take(spec, sub, "--confidence", "confidence", a.confidence);
  take(spec, sub, "--slack", "slack", a.slack);
  if (sub.count("--seed") == 0 && spec.contains("seed")) {
    std::uint64_t s = 0;
    take(spec, sub, "--seed", "seed", s);
    a.seed = s;
  }
  if (a.generator.empty()) config_error("generator", "no generator given by flag or input");
  if (a.k < 1) config_error("k", "k must be at least 1");
  if (a.trials < 1) config_error("trials", "trials must be at least 1");
  validate_params(a.params);
  const std::uint64_t seed = a.seed ? *a.seed : fresh_seed();

  std::vector<PointSet> instances;
  Generator gen;
  if (spec.contains("instances")) {
    std::size_t dense = 0;
    try {
      for (const json& inst : spec.at("instances")) {
        const auto pts = inst.at("points").get<std::vector<std::vector<double>>>();
        if (pts.empty()) data_error("instances", "instance without points");
        PointTable table;
        table.columns = pts.front().size();
        for (const auto& row : pts) {
          if (row.size() != table.columns) data_error("instances", "ragged points");
          table.values.insert(table.values.end(), row.begin(), row.end());
        }
        if (inst.contains("weights")) table.weights = inst.at("weights").get<std::vector<double>>();
        if (!gen) {
          dense = table.columns;
          gen = make_generator(a.generator, dense);
        } else if (dense != table.columns) {
          data_error("instances", "instances differ in dimension");
        }
        instances.push_back(make_pointset(gen.get(), table));
      }
    } catch (const json::exception& e) {
      data_error("instances", e.what());
    }
  } else if (spec.contains("random")) {
    std::size_t count = 20;
    std::size_t n = 8;
    std::size_t dimension = 2;
    try {
      const json& r = spec.at("random");
      count = r.value("count", count);
      n = r.value("n", n);
      dimension = r.value("dimension", dimension);
    } catch (const json::exception& e) {
      data_error("random", e.what());
    }
    gen = make_generator_dim(a.generator, dimension);
    for (std::size_t i = 0; i < count; ++i) {
      cg_pointset* s = nullptr;
      check(cg_random_instance(gen.get(), n, seed, i, &s), "random");
      instances.emplace_back(s);
    }
  }
  if (instances.empty()) data_error("input", "expected a non-empty instances or random block");

  cg_bench_options options = cg_bench_options_default();
  options.k = a.k;
  options.trials = a.trials;
  options.seed = seed;
  options.uv_samples = a.uv_samples;
  options.bootstrap_resamples = a.bootstrap;
  options.confidence = a.confidence;
  options.threads = common.threads;
  std::vector<const cg_pointset*> views;
  for (const auto& s : instances) views.push_back(s.get());
  std::vector<cg_instance_report> reports(instances.size());
  const cg_params params = a.params.get();
  check(cg_competitive_bench(gen.get(), views.data(), views.size(), &params, &options,
                             reports.data()),
        "input");

  json rows = json::array();
  double ratio_sum = 0.0;
  std::size_t counted = 0;
  std::size_t skipped = 0;
  std::size_t zero = 0;
  bool within = true;
  double u = 1.0, v = 1.0, rho = 1.0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const cg_instance_report& r = reports[i];
    const bool ok = r.skipped || r.bootstrap_upper <= r.bound * (1.0 + a.slack);
    within = within && ok;
    rows.push_back({{"index", i},
                    {"n", cg_pointset_size(views[i])},
                    {"phi_star", r.phi_star},
                    {"mean_ratio", r.mean_ratio},
                    {"bootstrap_upper", r.bootstrap_upper},
                    {"min_ratio", r.min_ratio},
                    {"u", r.u},
                    {"v", r.v},
                    {"rho", r.rho},
                    {"bound", r.bound},
                    {"within_bound", ok},
                    {"skipped", r.skipped != 0},
                    {"zero_optimum", r.zero_optimum != 0}});
    skipped += r.skipped ? 1 : 0;
    zero += r.zero_optimum ? 1 : 0;
    if (!r.skipped) {
      ratio_sum += r.mean_ratio;
      ++counted;
    }
    u = std::max(u, r.u);
    v = std::max(v, r.v);
    rho = std::max(rho, r.rho);
  }

  json echo = {{"subcommand", "seed-bench"}, {"input", a.input}, {"generator", a.generator}};
  echo.update(params_json(a.params));
  echo["k"] = a.k;
  echo["trials"] = a.trials;
  echo["seed"] = seed;
  echo["uv-samples"] = a.uv_samples;
  echo["bootstrap"] = a.bootstrap;
  echo["confidence"] = a.confidence;
  echo["slack"] = a.slack;

  json doc;
  doc["instances"] = rows;
  doc["mean_ratio"] = counted ? ratio_sum / static_cast<double>(counted) : 1.0;
  doc["u"] = u;
  doc["v"] = v;
  doc["rho"] = rho;
  doc["trials"] = a.trials;
  doc["skipped"] = skipped;
  doc["zero_optimum"] = zero;
  doc["all_within_bound"] = within;
  emit(doc, echo, seed, common);
}

// ---- --config handling ----

std::string config_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return shortest(v.get<double>());
  return v.dump();
}

// Expands --config FILE into explicit flags placed before the user's own,
// so that flags given on the command line take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       const std::vector<std::string>& subcommands) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) config_error("config", "--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;

  json cfg = read_json_file(path, "config");
  if (cfg.contains("meta") && cfg["meta"].contains("config")) cfg = cfg["meta"]["config"];
  if (!cfg.is_object()) data_error("config", "expected a JSON object");

  std::string sub;
  auto first = rest.begin();
  if (first != rest.end() &&
      std::find(subcommands.begin(), subcommands.end(), *first) != subcommands.end()) {
    sub = *first;
    rest.erase(first);
  }
  const std::string cfg_sub = cfg.value("subcommand", std::string());
  if (sub.empty()) sub = cfg_sub;
  if (sub.empty()) config_error("subcommand", "no subcommand given");
  if (!cfg_sub.empty() && cfg_sub != sub) {
    config_error("subcommand", "config is for '" + cfg_sub + "', not '" + sub + "'");
  }

  std::vector<std::string> out{sub};
  for (const auto& [key, value] : cfg.items()) {
    if (key == "subcommand" || value.is_null()) continue;
    if (value.is_structured()) config_error(key, "config values must be scalars");
    out.push_back("--" + key);
    out.push_back(config_value(value));
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::string flag_in(const std::string& message) {
  static const std::regex flag("--([A-Za-z][A-Za-z0-9-]*)");
  std::smatch m;
  if (std::regex_search(message, m, flag)) return m[1];
  return {};
}

int run(int argc, char** argv) {
  CLI::App app{"Chord gap divergences, centroids and clustering", "chordgap"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", std::string(cg_version()));
  app.require_subcommand(1);
  const auto choices = generator_choices();

  Common common;

  DivergenceArgs div;
  auto* div_cmd = app.add_subcommand("divergence", "Chord gap divergence with Taylor bounds");
  div_cmd->add_option("--generator", div.generator)->required()->check(CLI::IsMember(choices));
  add_params(div_cmd, div.params, true);
  div_cmd->add_option("--p", div.p, "First point (comma list, or row index into --points)")
      ->required();
  div_cmd->add_option("--q", div.q, "Second point")->required();
  div_cmd->add_option("--points", div.points, "CSV file the row indices refer to");
  add_common(div_cmd, common);

  StatdistArgs stat;
  auto* stat_cmd = app.add_subcommand("statdist", "Bhattacharyya and KL between two distributions");
  stat_cmd->add_option("--input", stat.input, "JSON file with distributions p and q")->required();
  add_params(stat_cmd, stat.params, false);
  add_common(stat_cmd, common);

  CentroidArgs cen;
  auto* cen_cmd = app.add_subcommand("centroid", "CCCP chord gap centroid of a CSV point set");
  cen_cmd->add_option("--generator", cen.generator)->required()->check(CLI::IsMember(choices));
  cen_cmd->add_option("--points", cen.points, "CSV file")->required();
  add_params(cen_cmd, cen.params, false);
  cen_cmd->add_option("--tol", cen.tol)->check(CLI::PositiveNumber);
  cen_cmd->add_option("--max-iter", cen.max_iter)->check(CLI::NonNegativeNumber);
  cen_cmd->add_option("--init", cen.init)->check(CLI::IsMember({"gradient-mean", "first-point"}));
  add_common(cen_cmd, common);

  ClusterArgs clu;
  auto* clu_cmd = app.add_subcommand("cluster", "k-means++ seeded chord gap Lloyd clustering");
  clu_cmd->add_option("--generator", clu.generator)->required()->check(CLI::IsMember(choices));
  clu_cmd->add_option("--points", clu.points, "CSV file")->required();
  add_params(clu_cmd, clu.params, false);
  clu_cmd->add_option("--k", clu.k)->check(CLI::PositiveNumber);
  clu_cmd->add_option("--seed", clu.seed);
  clu_cmd->add_option("--max-rounds", clu.max_rounds)->check(CLI::NonNegativeNumber);
  clu_cmd->add_option("--cccp-steps", clu.cccp_steps)->check(CLI::PositiveNumber);
  clu_cmd->add_option("--tol", clu.tol)->check(CLI::NonNegativeNumber);
  clu_cmd->add_option("--orientation", clu.orientation)
      ->check(CLI::IsMember({"point-first", "center-first"}));
  add_common(clu_cmd, common);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("seed-bench", "k-means++ competitive ratio benchmark");
  bench_cmd->add_option("--input", bench.input, "Ensemble spec JSON")->required();
  bench_cmd->add_option("--generator", bench.generator)->check(CLI::IsMember(choices));
  add_params(bench_cmd, bench.params, false);
  bench_cmd->add_option("--k", bench.k)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--trials", bench.trials)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--uv-samples", bench.uv_samples);
  bench_cmd->add_option("--bootstrap", bench.bootstrap);
  bench_cmd->add_option("--confidence", bench.confidence)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--slack", bench.slack)->check(CLI::NonNegativeNumber);
  add_common(bench_cmd, common);

  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  args = expand_config(args, {"divergence", "statdist", "centroid", "cluster", "seed-bench"});
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error({kExitConfig, flag_in(e.what()), e.what()});
  }

  if (*div_cmd) run_divergence(div, common);
  if (*stat_cmd) run_statdist(stat, *stat_cmd, common);
  if (*cen_cmd) run_centroid(cen, common);
  if (*clu_cmd) run_cluster(clu, common);
  if (*bench_cmd) run_seed_bench(bench, *bench_cmd, common);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    return report_error({kExitInternal, "", e.what()});
  }
}
