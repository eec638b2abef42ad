// Copyright 2026 The sharpkit Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "parse.hpp"
#include "report.hpp"
#include "reproduce.hpp"
#include "sharpkit/sharpkit.hpp"

namespace sharpkit::cli {
namespace {

struct CommonOptions {
  std::string out = "json";
  std::uint64_t seed = 0;
  std::size_t grid_cells = default_grid_cells;
  bool pretty = false;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_option("--grid-cells", o.grid_cells, "Cells used to grid analytic densities")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--pretty", o.pretty, "Indented JSON");
}

// Options given before the subcommand apply unless repeated after it.
CommonOptions merge_common(const CLI::App& top_app, const CommonOptions& top, const CLI::App& sub,
                           CommonOptions local) {
  const auto from_top = [&](const char* name) { return sub.count(name) == 0 && top_app.count(name) > 0; };
  if (from_top("--out")) local.out = top.out;
  if (from_top("--seed")) local.seed = top.seed;
  if (from_top("--grid-cells")) local.grid_cells = top.grid_cells;
  if (from_top("--pretty")) local.pretty = top.pretty;
  return local;
}

struct DensitySource {
  std::string preset;
  std::string samples_csv;
  std::string values_csv;
  std::string shape;
  std::string domain;
  std::size_t bins = default_histogram_bins;
  bool renormalize = false;
};

void add_density_source(CLI::App* sub, DensitySource& s) {
  sub->add_option("--preset", s.preset, "Analytic density: uniform | gauss:mu=..,sigma=.. | mixture:w1=..,mu1=..,"
                                        "sigma1=..,w2=.. | piecewise:start:value,...");
  sub->add_option("--csv", s.samples_csv, "Sample values (histogram density)");
  sub->add_option("--values-csv", s.values_csv, "Gridded density values, row-major");
  sub->add_option("--shape", s.shape, "Cells per axis for --values-csv, e.g. 2,2,2");
  sub->add_option("--domain", s.domain, "Domain bounds, lo:hi[,lo:hi...]")->required();
  sub->add_option("--bins", s.bins, "Histogram bins for --csv")->check(CLI::PositiveNumber);
  sub->add_flag("--renormalize", s.renormalize, "Rescale --values-csv to unit mass");
}

GriddedDensity build_density(const DensitySource& s, const CommonOptions& c) {
  const int sources = int(!s.preset.empty()) + int(!s.samples_csv.empty()) + int(!s.values_csv.empty());
  require(sources == 1, ErrorKind::ParseError, "give exactly one of --preset, --csv, --values-csv");
  const BoundedDomain domain = parse_domain(s.domain);
  if (!s.preset.empty()) return parse_preset(s.preset, domain, c.grid_cells);
  if (!s.samples_csv.empty()) {
    auto in = open_input(s.samples_csv);
    const auto samples = read_numbers(in, s.samples_csv);
    return density_from_samples(samples, domain, s.bins);
  }
  auto in = open_input(s.values_csv);
  auto values = read_numbers(in, s.values_csv);
  std::vector<std::size_t> shape = s.shape.empty() ? std::vector<std::size_t>{values.size()}
                                                   : parse_size_list(s.shape, "--shape");
  return GriddedDensity::from_values(domain, std::move(shape), std::move(values),
                                     s.renormalize ? NormalizationPolicy::Renormalize : NormalizationPolicy::Strict);
}

void emit(std::ostream& out, const json& j, const CommonOptions& c) { out << j.dump(c.pretty ? 2 : -1) << '\n'; }

json header(const char* command) { return {{"schema", schema_version}, {"command", command}}; }

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  require(bool(f), ErrorKind::ParseError, "cannot write '" + path + "'");
  return f;
}

struct CsvRow {
  std::ostream& os;
  bool first = true;
  explicit CsvRow(std::ostream& o) : os(o) { os << std::setprecision(17); }
  template <class T>
  CsvRow& operator<<(const T& v) {
    if (!first) os << ',';
    if constexpr (std::is_convertible_v<const T&, std::string_view>) {
      const std::string_view sv(v);
      if (sv.find_first_of(",\"\n") == std::string_view::npos) {
        os << sv;
      } else {  // RFC 4180 quoting
        os << '"';
        for (char ch : sv) os << (ch == '"' ? "\"\"" : std::string_view(&ch, 1));
        os << '"';
      }
    } else {
      os << v;
    }
    first = false;
    return *this;
  }
  ~CsvRow() { os << '\n'; }
};

// ---------------------------------------------------------------- discrete

struct DiscreteOptions {
  std::string probs;
  std::string csv;
  std::string labels;
  bool renormalize = false;
  bool steps = false;
};

void cmd_discrete(const DiscreteOptions& o, const CommonOptions& c, std::ostream& out) {
  require(o.probs.empty() != o.csv.empty(), ErrorKind::ParseError, "give exactly one of --probs, --csv");
  std::vector<double> raw;
  if (!o.probs.empty()) {
    raw = parse_list(o.probs, "--probs");
  } else {
    auto in = open_input(o.csv);
    raw = read_numbers(in, o.csv);
  }
  const auto p = validate_distribution(raw, o.renormalize ? NormalizationPolicy::Renormalize
                                                          : NormalizationPolicy::Strict);
  std::optional<std::vector<double>> labels;
  if (!o.labels.empty()) labels = parse_list(o.labels, "--labels");
  const double var = labels ? variance_discrete(p, std::span<const double>(*labels)) : variance_discrete(p);

  const auto cumulative = sharpness_cumulative(p);
  const double s = sharpness_discrete(p);
  if (std::abs(s - cumulative.score) > 1e-12) {
    fail(ErrorKind::InternalError, "cumulative and compact sharpness disagree");
  }

  if (c.out == "csv") {
    { CsvRow(out) << "sharpness" << "tvd_sharpness" << "entropy_bits" << "kl_bits" << "variance"; }
    CsvRow(out) << s << tvd_sharpness(p) << entropy_discrete(p) << kl_from_uniform_discrete(p) << var;
    return;
  }
  json j = header("discrete");
  j["n"] = p.size();
  j["probs"] = std::vector<double>(p.probs().begin(), p.probs().end());
  j["sharpness"] = s;
  j["tvd_sharpness"] = tvd_sharpness(p);
  j["entropy_bits"] = entropy_discrete(p);
  j["kl_bits"] = kl_from_uniform_discrete(p);
  j["variance"] = var;
  if (o.steps) {
    json steps = json::array();
    for (const auto& st : cumulative.steps) steps.push_back(to_json(st));
    j["steps"] = steps;
  }
  emit(out, j, c);
}

// ----------------------------------------------------------------- density

struct DensityOptions {
  DensitySource source;
  std::string lorenz_csv;
  std::string mass_length_csv;
  std::size_t lorenz_points = 0;
};

void cmd_density(const DensityOptions& o, const CommonOptions& c, std::ostream& out) {
  const auto d = build_density(o.source, c);
  const auto d_star = rearrange(d);
  const auto curve = mass_length(d_star);
  const auto lz = lorenz(d_star, o.lorenz_points);
  const double s_simple = sharpness_simplified(d_star);
  const double s_integral = sharpness_integral(curve);
  const double s_gini = sharpness_gini(lz);
  const double t_min = support_boundary(d_star);

  if (!o.lorenz_csv.empty()) {
    auto f = open_output(o.lorenz_csv);
    write_csv(f, lz);
  }
  if (!o.mass_length_csv.empty()) {
    auto f = open_output(o.mass_length_csv);
    write_csv(f, curve);
  }

  if (c.out == "csv") {
    { CsvRow(out) << "sharpness" << "sharpness_integral" << "sharpness_gini" << "entropy_nats" << "kl_nats" << "t_min"; }
    CsvRow(out) << s_simple << s_integral << s_gini << entropy_continuous(d) << kl_from_uniform_continuous(d) << t_min;
    return;
  }
  json j = header("density");
  j["domain"] = to_json(d.domain());
  j["cells"] = d.size();
  j["sharpness"] = s_simple;
  j["sharpness_integral"] = s_integral;
  j["sharpness_gini"] = s_gini;
  j["entropy_nats"] = entropy_continuous(d);
  j["kl_nats"] = kl_from_uniform_continuous(d);
  j["t_min"] = t_min;
  emit(out, j, c);
}

// --------------------------------------------------------------- transform

struct TransformOptions {
  std::string mode;
  double s = 0.0;
  std::size_t m = 0;
  std::size_t n = 0;
  double l = 0.0;
  double big_l = 0.0;
};

void cmd_transform(const TransformOptions& o, const CommonOptions& c, std::ostream& out) {
  double result = 0.0;
  json input = {{"s", o.s}};
  if (o.mode == "discrete-forward" || o.mode == "discrete-inverse") {
    require(o.m > 0 && o.n > 0, ErrorKind::ParseError, o.mode + " needs --m and --n");
    input["m"] = o.m;
    input["n"] = o.n;
    result = o.mode == "discrete-forward" ? discrete_forward(o.s, o.m, o.n) : discrete_inverse(o.s, o.n, o.m);
  } else {
    require(o.l > 0.0 && o.big_l > 0.0, ErrorKind::ParseError, o.mode + " needs --l and --L");
    input["l"] = o.l;
    input["L"] = o.big_l;
    result = o.mode == "continuous-forward" ? continuous_forward(o.s, o.l, o.big_l)
                                            : continuous_inverse(o.s, o.big_l, o.l);
  }
  if (c.out == "csv") {
    { CsvRow(out) << "mode" << "result"; }
    CsvRow(out) << o.mode << result;
    return;
  }
  json j = header("transform");
  j["mode"] = o.mode;
  j["input"] = input;
  j["result"] = result;
  emit(out, j, c);
}

// ---------------------------------------------------------------- diagnose

struct DiagnoseOptions {
  DensitySource source;
  std::vector<std::string> at;
  std::vector<std::string> t_ranges;
  std::vector<std::string> regions;
  std::vector<std::string> region_cells;
  std::optional<double> eps;
};

void cmd_diagnose(const DiagnoseOptions& o, const CommonOptions& c, std::ostream& out) {
  const auto d = build_density(o.source, c);
  const auto d_star = rearrange(d);
  const auto curve = mass_length(d_star);

  struct PointRow {
    MappedPoint mapped;
    double rl, rank, above;
  };
  std::vector<PointRow> points;
  for (const auto& a : o.at) {
    const auto y = parse_list(a, "--at");
    require(d.domain().contains(y), ErrorKind::OutOfDomain, "--at " + a + " lies outside the domain");
    PointRow r{map_point(d, d_star, y, o.eps), relative_likelihood(d, y), relative_rank(d, d_star, y), 0.0};
    r.above = mass_above(d_star, d_star[r.mapped.t_index]);
    points.push_back(std::move(r));
  }

  json t_contrib = json::array();
  for (const auto& r : o.t_ranges) {
    const auto [a, b] = parse_range(r, "--t-range");
    t_contrib.push_back({{"range", {a, b}}, {"contribution", local_contribution(curve, a, b)}});
  }
  json region_contrib = json::array();
  for (const auto& r : o.regions) {
    const auto [a, b] = parse_range(r, "--region");
    const auto cells = cells_in_interval(d, a, b);
    region_contrib.push_back({{"range", {a, b}},
                              {"cells", cells.size()},
                              {"contribution", local_contribution_region(d, d_star, curve, cells)}});
  }
  for (const auto& r : o.region_cells) {
    const auto cells = parse_size_list(r, "--region-cells");
    region_contrib.push_back({{"cell_ids", cells},
                              {"cells", cells.size()},
                              {"contribution", local_contribution_region(d, d_star, curve, cells)}});
  }

  if (c.out == "csv") {
    { CsvRow(out) << "y" << "density" << "t_index" << "t" << "rl" << "rank" << "mass_above"; }
    for (const auto& p : points) {
      std::ostringstream y;
      y << std::setprecision(17);
      for (std::size_t k = 0; k < p.mapped.source.size(); ++k) y << (k ? ";" : "") << p.mapped.source[k];
      CsvRow(out) << y.str() << p.mapped.density << p.mapped.t_index << p.mapped.t << p.rl << p.rank << p.above;
    }
    return;
  }

  json j = header("diagnose");
  j["domain"] = to_json(d.domain());
  j["cells"] = d.size();
  j["sharpness"] = sharpness_simplified(d_star);
  j["t_min"] = support_boundary(d_star);
  j["key_points"] = to_json(key_points(d, d_star));
  json mapped = json::array(), rl = json::array(), rank = json::array(), above = json::array();
  for (const auto& p : points) {
    mapped.push_back(to_json(p.mapped));
    rl.push_back(p.rl);
    rank.push_back(p.rank);
    above.push_back(p.above);
  }
  j["mapped_points"] = mapped;
  j["contributions"] = {{"t_ranges", t_contrib}, {"regions", region_contrib}};
  j["mass_above"] = above;
  j["rl"] = rl;
  j["rank"] = rank;
  emit(out, j, c);
}

// -------------------------------------------------------------------- grid

struct GridOptions {
  std::string csv;
  bool demo = false;
  std::string domain = "0:10";
  std::size_t bins = default_histogram_bins;
};

EnsembleGrid grid_from_csv(const std::string& path, const BoundedDomain& domain) {
  auto in = open_input(path);
  auto records = read_ensemble_csv(in, path);
  require(!records.empty(), ErrorKind::EmptySample, path + ": no samples");
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.row, a.col, a.member) < std::tie(b.row, b.col, b.member);
  });
  std::size_t rows = 0, cols = 0;
  for (const auto& r : records) {
    rows = std::max(rows, r.row + 1);
    cols = std::max(cols, r.col + 1);
  }
  std::vector<std::vector<double>> members(rows * cols);
  for (const auto& r : records) members[r.row * cols + r.col].push_back(r.value);
  return EnsembleGrid(rows, cols, std::move(members), domain);
}

void cmd_grid(const GridOptions& o, const CommonOptions& c, std::ostream& out) {
  require(o.demo != !o.csv.empty(), ErrorKind::ParseError, "give exactly one of --csv, --demo-paper");
  const BoundedDomain domain = parse_domain(o.domain);
  require(domain.dim() == 1, ErrorKind::ParseError, "--domain must be one-dimensional for grid");

  std::optional<EnsembleGrid> grid;
  if (o.demo) {
    RainfallSimulation cfg;
    cfg.domain_lo = domain.axis(0).lo;
    cfg.domain_hi = domain.axis(0).hi;
    grid = simulate_rainfall(cfg, c.seed).grid;
  } else {
    grid = grid_from_csv(o.csv, domain);
  }
  const auto map = grid_sharpness_map(*grid, o.bins);

  if (c.out == "csv") {
    { CsvRow(out) << "row" << "col" << "sharpness" << "lo" << "hi" << "n"; }
    for (const auto& cell : map.cells) {
      CsvRow(out) << cell.row << cell.col << cell.sharpness << cell.interval.lo << cell.interval.hi << cell.member_count;
    }
    return;
  }
  json j = header("grid");
  json meta;
  meta["seed"] = o.demo ? json(c.seed) : json(nullptr);
  meta["bins"] = o.bins;
  meta["domain"] = {domain.axis(0).lo, domain.axis(0).hi};
  meta["rows"] = map.rows;
  meta["cols"] = map.cols;
  if (o.demo) meta["generator"] = Rng::engine_name;
  j["meta"] = meta;
  json cells = json::array();
  for (const auto& cell : map.cells) cells.push_back(to_json(cell));
  j["cells"] = cells;
  emit(out, j, c);
}

// ---------------------------------------------------------------- levelset

struct LevelsetOptions {
  std::size_t n = 4;
  std::string constrain = "variance";
  double target = 1.0;
  double tol = 0.01;
  std::string score = "sharpness";
  std::size_t samples = 1'000'000;
  std::string entropy_unit = "nats";
  std::string dump_csv;
  std::size_t dump_cap = 100'000;
};

void cmd_levelset(const LevelsetOptions& o, const CommonOptions& c, std::ostream& out) {
  LevelSetQuery q;
  q.n = o.n;
  q.constrain = *parse_measure(o.constrain);
  q.target = o.target;
  q.tol = o.tol;
  q.score = *parse_measure(o.score);
  q.sample_count = o.samples;
  q.seed = c.seed;
  q.entropy_unit = o.entropy_unit == "bits" ? LogBase::Bits : LogBase::Nats;
  const auto res = level_set_extrema(q, o.dump_csv.empty() ? 0 : o.dump_cap);

  if (!o.dump_csv.empty()) {
    auto f = open_output(o.dump_csv);
    {
      CsvRow h(f);
      h << "index";
      for (std::size_t k = 0; k < q.n; ++k) h << "p" + std::to_string(k + 1);
      h << "sharpness" << "entropy_bits" << "entropy_nats" << "variance" << "score";
    }
    for (const auto& s : res.kept) {
      CsvRow r(f);
      r << s.index;
      for (double p : s.probs) r << p;
      r << s.sharpness << s.entropy_bits << s.entropy_nats << s.variance << s.score;
    }
  }

  if (c.out == "csv") {
    { CsvRow(out) << "extremum" << "index" << "score" << "sharpness" << "entropy_nats" << "variance" << "kept_count"; }
    for (const auto* which : {&res.min, &res.max}) {
      CsvRow(out) << (which == &res.min ? "min" : "max") << which->index << which->score << which->sharpness
                  << which->entropy_nats << which->variance << res.kept_count;
    }
    return;
  }
  json j = header("levelset");
  j["query"] = to_json(q);
  j["kept_count"] = res.kept_count;
  j["min"] = to_json(res.min);
  j["max"] = to_json(res.max);
  if (!o.dump_csv.empty()) j["dumped"] = res.kept.size();
  emit(out, j, c);
}

// --------------------------------------------------------------- reproduce

bool cmd_reproduce(const std::string& which, const CommonOptions& c, std::ostream& out) {
  std::vector<Check> checks;
  const bool cells_overridden = c.grid_cells != default_grid_cells;
  const std::size_t cells = cells_overridden ? c.grid_cells : continuous_reference_cells;
  if (which == "table1") {
    checks = reproduce_table1();
  } else if (which == "table2") {
    checks = reproduce_table2(cells);
  } else if (which == "cube") {
    checks = reproduce_cube();
  } else {
    checks = reproduce_rl_example(cells);
  }
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });

  if (c.out == "csv") {
    { CsvRow(out) << "case" << "quantity" << "expected" << "computed" << "tolerance" << "pass" << "note"; }
    for (const auto& k : checks) {
      CsvRow(out) << k.name << k.quantity << k.expected << k.computed << k.tolerance << (k.pass ? "true" : "false") << k.note;
    }
    return all;
  }
  json j = header("reproduce");
  j["case"] = which;
  json rows = json::array();
  for (const auto& k : checks) {
    rows.push_back({{"case", k.name},
                    {"quantity", k.quantity},
                    {"expected", k.expected},
                    {"computed", k.computed},
                    {"tolerance", k.tolerance},
                    {"pass", k.pass}});
    if (!k.note.empty()) rows.back()["note"] = k.note;
  }
  j["checks"] = rows;
  j["pass"] = all;
  emit(out, j, c);
  return all;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Predictive sharpness of discrete and continuous distributions", "sharpkit"};
  app.require_subcommand(0, 1);

  CommonOptions top;
  std::string reproduce;
  app.add_option("--reproduce", reproduce, "Recompute reference values: table1 | table2 | cube | rl-example")
      ->check(CLI::IsMember({"table1", "table2", "cube", "rl-example"}));
  add_common(&app, top);

  CommonOptions c_discrete, c_density, c_transform, c_diagnose, c_grid, c_levelset;

  DiscreteOptions discrete_opts;
  auto* discrete = app.add_subcommand("discrete", "Sharpness and companions of a probability vector");
  discrete->add_option("--probs", discrete_opts.probs, "Comma-separated probabilities");
  discrete->add_option("--csv", discrete_opts.csv, "File with probabilities");
  discrete->add_option("--labels", discrete_opts.labels, "Numeric outcome labels for the variance");
  discrete->add_flag("--renormalize", discrete_opts.renormalize, "Divide entries by their sum");
  discrete->add_flag("--steps", discrete_opts.steps, "Include the per-step cumulative decomposition");
  add_common(discrete, c_discrete);

  DensityOptions density_opts;
  auto* density = app.add_subcommand("density", "Sharpness of a continuous density");
  add_density_source(density, density_opts.source);
  density->add_option("--lorenz-csv", density_opts.lorenz_csv, "Write the Lorenz curve (u,L)");
  density->add_option("--mass-length-csv", density_opts.mass_length_csv, "Write the mass-length curves");
  density->add_option("--lorenz-points", density_opts.lorenz_points, "Lorenz grid size (default: cells + 1)");
  add_common(density, c_density);

  TransformOptions transform_opts;
  auto* transform = app.add_subcommand("transform", "Rescale a score across domain sizes");
  transform->add_option("--mode", transform_opts.mode)
      ->required()
      ->check(CLI::IsMember({"discrete-forward", "discrete-inverse", "continuous-forward", "continuous-inverse"}));
  transform->add_option("--s", transform_opts.s, "Input score")->required();
  transform->add_option("--m", transform_opts.m, "Smaller outcome count");
  transform->add_option("--n", transform_opts.n, "Larger outcome count");
  transform->add_option("--l", transform_opts.l, "Smaller measure");
  transform->add_option("--L", transform_opts.big_l, "Larger measure");
  add_common(transform, c_transform);

  DiagnoseOptions diagnose_opts;
  auto* diagnose = app.add_subcommand("diagnose", "Rearranged-space diagnostics");
  add_density_source(diagnose, diagnose_opts.source);
  diagnose->add_option("--at", diagnose_opts.at, "Point to map (comma-separated coordinates)");
  diagnose->add_option("--t-range", diagnose_opts.t_ranges, "Rearranged interval a:b for a local contribution");
  diagnose->add_option("--region", diagnose_opts.regions, "Original-space interval a:b for a local contribution");
  diagnose->add_option("--region-cells", diagnose_opts.region_cells, "Original-space cell ids for a contribution");
  diagnose->add_option("--eps", diagnose_opts.eps, "Plateau tolerance");
  add_common(diagnose, c_diagnose);

  GridOptions grid_opts;
  auto* grid = app.add_subcommand("grid", "Per-cell sharpness of an ensemble grid");
  grid->add_option("--csv", grid_opts.csv, "Ensemble samples, header row,col,member,value");
  grid->add_flag("--demo-paper", grid_opts.demo, "Simulated 6x6 rainfall ensemble");
  grid->add_option("--domain", grid_opts.domain, "Forecast variable bounds lo:hi");
  grid->add_option("--bins", grid_opts.bins, "Histogram bins")->check(CLI::PositiveNumber);
  add_common(grid, c_grid);

  LevelsetOptions levelset_opts;
  auto* levelset = app.add_subcommand("levelset", "Overlay extrema on a sampled simplex level set");
  const auto measures = CLI::IsMember({"sharpness", "entropy", "variance"});
  levelset->add_option("--n", levelset_opts.n, "Outcome count")->check(CLI::Range(2, 1 << 20));
  levelset->add_option("--constrain", levelset_opts.constrain, "Measure that defines the level set")->check(measures);
  levelset->add_option("--target", levelset_opts.target, "Level value");
  levelset->add_option("--tol", levelset_opts.tol, "Half-width around the level");
  levelset->add_option("--score", levelset_opts.score, "Measure reported over the set")->check(measures);
  levelset->add_option("--samples", levelset_opts.samples, "Simplex draws")->check(CLI::PositiveNumber);
  levelset->add_option("--entropy-unit", levelset_opts.entropy_unit)->check(CLI::IsMember({"bits", "nats"}));
  levelset->add_option("--dump-csv", levelset_opts.dump_csv, "Write kept samples");
  levelset->add_option("--dump-cap", levelset_opts.dump_cap, "Maximum rows in --dump-csv");
  add_common(levelset, c_levelset);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (discrete->parsed()) {
      cmd_discrete(discrete_opts, merge_common(app, top, *discrete, c_discrete), out);
    } else if (density->parsed()) {
      cmd_density(density_opts, merge_common(app, top, *density, c_density), out);
    } else if (transform->parsed()) {
      cmd_transform(transform_opts, merge_common(app, top, *transform, c_transform), out);
    } else if (diagnose->parsed()) {
      cmd_diagnose(diagnose_opts, merge_common(app, top, *diagnose, c_diagnose), out);
    } else if (grid->parsed()) {
      cmd_grid(grid_opts, merge_common(app, top, *grid, c_grid), out);
    } else if (levelset->parsed()) {
      cmd_levelset(levelset_opts, merge_common(app, top, *levelset, c_levelset), out);
    } else if (!reproduce.empty()) {
      return cmd_reproduce(reproduce, top, out) ? kOk : kInternalError;
    } else {
      err << app.help();
      return kInputError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace sharpkit::cli
