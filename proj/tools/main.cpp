// Command-line front end for the plcoh library. Everything here goes through
// the public C interface; no internal headers.
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plcoh.h"

namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_ok(plcoh_status status, const std::string& context) {
  if (status == PLCOH_OK) return;
  throw CliError(context + ": " + plcoh_status_name(status) + ": " +
                 plcoh_last_error());
}

std::string now_iso8601() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Full precision for CSV cells: round-trips doubles exactly.
std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Six significant digits for human-readable reports.
std::string human_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int default_jobs_from_env() {
  const char* env = std::getenv("PLCOH_JOBS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) {
    std::cerr << "warning: ignoring invalid PLCOH_JOBS value '" << env
              << "'\n";
    return 0;
  }
  return static_cast<int>(v);
}

struct InputData {
  std::vector<double> x, y;
  bool had_header = false;
  std::size_t extra_columns = 0;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    const auto begin = field.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      fields.emplace_back();
      continue;
    }
    const auto end = field.find_last_not_of(" \t\r");
    fields.push_back(field.substr(begin, end - begin + 1));
  }
  return fields;
}

bool parse_double(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

// Two-column x,y CSV. The header row is optional and detected by the first
// row's fields not parsing as numbers; extra columns are ignored with a
// warning.
InputData read_pair_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("--input: cannot open '" + path + "'");
  InputData data;
  std::string line;
  std::size_t lineno = 0;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() < 2) {
      throw CliError("--input: line " + std::to_string(lineno) +
                     " has fewer than two columns");
    }
    double vx = 0.0, vy = 0.0;
    const bool numeric =
        parse_double(fields[0], &vx) && parse_double(fields[1], &vy);
    if (!numeric) {
      if (first_data_row && data.x.empty()) {
        data.had_header = true;
        continue;
      }
      throw CliError("--input: line " + std::to_string(lineno) +
                     " is not numeric");
    }
    first_data_row = false;
    if (fields.size() > 2 && data.extra_columns == 0) {
      data.extra_columns = fields.size() - 2;
      std::cerr << "warning: " << path << " has " << fields.size()
                << " columns; using the first two as x,y\n";
    }
    data.x.push_back(vx);
    data.y.push_back(vy);
  }
  if (data.x.empty()) throw CliError("--input: '" + path + "' has no data rows");
  return data;
}

void write_manifest(const std::string& path, const std::string& command,
                    json parameters, const std::vector<std::string>& outputs,
                    const std::string& started, const std::string& finished) {
  json manifest;
  manifest["command"] = command;
  manifest["parameters"] = std::move(parameters);
  if (manifest["parameters"].contains("seed")) {
    manifest["seed"] = manifest["parameters"]["seed"];
  }
  manifest["started_at"] = started;
  manifest["finished_at"] = finished;
  manifest["outputs"] = outputs;
  manifest["library_version"] = plcoh_version();
  std::ofstream out(path);
  if (!out) throw CliError("cannot write manifest '" + path + "'");
  out << manifest.dump(2) << "\n";
  if (!out.good()) throw CliError("failed writing manifest '" + path + "'");
}

std::string manifest_path_for(const std::string& output_path) {
  std::filesystem::path p(output_path);
  p.replace_extension(".manifest.json");
  return p.string();
}

plcoh_method parse_method(const std::string& name) {
  if (name == "dcca") return PLCOH_DCCA;
  if (name == "dmca") return PLCOH_DMCA;
  if (name == "hxa") return PLCOH_HXA;
  throw CliError("--method: expected dcca, dmca, or hxa, got '" + name + "'");
}

// Standard option axes: s_min for DCCA, kappa_max for DMCA, tau_max for HXA.
std::vector<int> standard_option_axis(plcoh_method method) {
  switch (method) {
    case PLCOH_DCCA:
      return {10, 50, 100};
    case PLCOH_DMCA:
      return {21, 51, 101};
    case PLCOH_HXA:
      return {20, 50, 100};
  }
  return {};
}

json params_json(const plcoh_arfima_params& p) {
  return json{{"d1", p.d1},
              {"d2", p.d2},
              {"d3", p.d3},
              {"d4", p.d4},
              {"sigma", {p.sigma[0], p.sigma[1], p.sigma[2], p.sigma[3]}},
              {"rho23", p.rho23},
              {"length", p.length},
              {"n_trunc", plcoh_resolved_n_trunc(&p)},
              {"seed", p.seed}};
}

json options_json(plcoh_method method, const plcoh_estimate_options& o) {
  json j{{"method", plcoh_method_name(method)}};
  switch (method) {
    case PLCOH_DCCA:
      j["s_min"] = o.s_min;
      j["s_max"] = o.s_max;
      j["box_step"] = o.box_step;
      if (o.s_step > 0) {
        j["s_step"] = o.s_step;
      } else {
        j["scales_per_decade"] = o.scales_per_decade;
      }
      break;
    case PLCOH_DMCA:
      j["kappa_max"] = o.kappa_max;
      break;
    case PLCOH_HXA:
      j["tau_max"] = o.tau_max;
      j["jackknife"] = o.hxa_jackknife != 0;
      break;
  }
  return j;
}

// ------------------------------------------------------------------
// generate
// ------------------------------------------------------------------

struct GenerateArgs {
  plcoh_arfima_params params{};
  std::string out;
  bool seed_given = false;
};

int cmd_generate(GenerateArgs& args) {
  const std::string started = now_iso8601();
  if (!args.seed_given) {
    args.params.seed = fresh_seed();
    std::cerr << "note: --seed not given; using seed " << args.params.seed
              << " (recorded in the manifest)\n";
  }
  plcoh_series* series = nullptr;
  require_ok(plcoh_generate(&args.params, 0, &series), "generate");
  const double* x = nullptr;
  const double* y = nullptr;
  require_ok(plcoh_series_data(series, &x, &y), "generate");
  const std::size_t n = plcoh_series_length(series);

  std::ofstream out(args.out);
  if (!out) {
    plcoh_series_destroy(series);
    throw CliError("--out: cannot open '" + args.out + "'");
  }
  out << "x,y\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << csv_num(x[i]) << "," << csv_num(y[i]) << "\n";
  }
  plcoh_series_destroy(series);
  if (!out.good()) throw CliError("--out: failed writing '" + args.out + "'");
  out.close();

  write_manifest(manifest_path_for(args.out), "generate",
                 params_json(args.params), {args.out}, started, now_iso8601());
  std::cout << "wrote " << n << " rows to " << args.out << "\n";
  return 0;
}

// ------------------------------------------------------------------
// estimate / fluctuation
// ------------------------------------------------------------------

struct EstimateArgs {
  std::string input;
  std::string method_name = "dcca";
  plcoh_estimate_options options{};
  bool jackknife = true;
  std::string emit_profile;  // empty: report only
};

plcoh_series* load_series(const std::string& path) {
  const InputData data = read_pair_csv(path);
  plcoh_series* series = nullptr;
  require_ok(plcoh_series_create(data.x.data(), data.y.data(), data.x.size(),
                                 &series),
             "--input");
  return series;
}

int cmd_estimate(EstimateArgs& args) {
  const std::string started = now_iso8601();
  args.options.hxa_jackknife = args.jackknife ? 1 : 0;
  const plcoh_method method = parse_method(args.method_name);
  plcoh_series* series = load_series(args.input);

  plcoh_estimates est{};
  const plcoh_status status =
      plcoh_estimate(method, series, &args.options, &est);
  if (status != PLCOH_OK) {
    plcoh_series_destroy(series);
    require_ok(status, "estimate");
  }

  std::cout << "method        " << plcoh_method_name(method) << "\n"
            << "input         " << args.input << "\n"
            << "length        " << plcoh_series_length(series) << "\n"
            << "H_rho         " << human_num(est.h_rho) << "\n"
            << "H_x           " << human_num(est.h_x) << "\n"
            << "H_y           " << human_num(est.h_y) << "\n"
            << "H_xy          " << human_num(est.h_xy) << "\n"
            << "fit_points    " << est.fit_points << "\n"
            << "residual_sse  " << human_num(est.residual_sse) << "\n";
  if (method == PLCOH_HXA && args.options.hxa_jackknife) {
    std::cout << "jackknife_fits " << est.jackknife_fits << "\n"
              << "jackknife_skips " << est.jackknife_skips << "\n";
  }

  int rc = 0;
  if (!args.emit_profile.empty()) {
    plcoh_profile* profile = nullptr;
    const plcoh_status pstatus =
        plcoh_coherency_profile(method, series, &args.options, &profile);
    if (pstatus != PLCOH_OK) {
      plcoh_series_destroy(series);
      require_ok(pstatus, "--emit-profile");
    }
    std::ofstream out(args.emit_profile);
    if (!out) {
      plcoh_profile_destroy(profile);
      plcoh_series_destroy(series);
      throw CliError("--emit-profile: cannot open '" + args.emit_profile + "'");
    }
    out << "scale,rho2\n";
    for (std::size_t i = 0; i < plcoh_profile_size(profile); ++i) {
      double scale = 0.0, value = 0.0;
      require_ok(plcoh_profile_row(profile, i, &scale, &value),
                 "--emit-profile");
      out << csv_num(scale) << "," << csv_num(value) << "\n";
    }
    const std::size_t dropped = plcoh_profile_dropped(profile);
    if (dropped > 0) {
      std::cerr << "note: " << dropped
                << " scale(s) dropped (degenerate denominator)\n";
    }
    plcoh_profile_destroy(profile);
    if (!out.good()) {
      plcoh_series_destroy(series);
      throw CliError("--emit-profile: failed writing '" + args.emit_profile +
                     "'");
    }
    out.close();
    json parameters = options_json(method, args.options);
    parameters["input"] = args.input;
    write_manifest(manifest_path_for(args.emit_profile), "estimate",
                   parameters, {args.emit_profile}, started, now_iso8601());
  }
  plcoh_series_destroy(series);
  return rc;
}

struct FluctuationArgs {
  std::string input;
  std::string method_name = "dcca";
  plcoh_estimate_options options{};
  bool jackknife = true;
  std::string out;
};

int cmd_fluctuation(FluctuationArgs& args) {
  const std::string started = now_iso8601();
  args.options.hxa_jackknife = args.jackknife ? 1 : 0;
  const plcoh_method method = parse_method(args.method_name);
  plcoh_series* series = load_series(args.input);

  plcoh_profile* profile = nullptr;
  const plcoh_status status =
      plcoh_fluctuation_profile(method, series, &args.options, &profile);
  plcoh_series_destroy(series);
  require_ok(status, "fluctuation");

  std::ofstream out(args.out);
  if (!out) {
    plcoh_profile_destroy(profile);
    throw CliError("--out: cannot open '" + args.out + "'");
  }
  out << "scale,value\n";
  for (std::size_t i = 0; i < plcoh_profile_size(profile); ++i) {
    double scale = 0.0, value = 0.0;
    require_ok(plcoh_profile_row(profile, i, &scale, &value), "fluctuation");
    out << csv_num(scale) << "," << csv_num(value) << "\n";
  }
  plcoh_profile_destroy(profile);
  if (!out.good()) throw CliError("--out: failed writing '" + args.out + "'");
  out.close();

  json parameters = options_json(method, args.options);
  parameters["input"] = args.input;
  write_manifest(manifest_path_for(args.out), "fluctuation", parameters,
                 {args.out}, started, now_iso8601());
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

// ------------------------------------------------------------------
// mc / sweep
// ------------------------------------------------------------------

// One table block: a set of lengths sharing one option axis. The standard
// tables vary the DCCA s_min axis with T, hence multiple blocks.
struct TableBlock {
  std::vector<std::size_t> lengths;
  std::vector<int> options;
};

struct McPlan {
  plcoh_method method = PLCOH_DMCA;
  std::vector<TableBlock> blocks;
  std::vector<double> rhos = {0.1, 0.5, 0.9};
  int reps = 1000;
  std::string csv_name;
};

McPlan preset_plan(const std::string& name) {
  McPlan plan;
  plan.csv_name = name + ".csv";
  const bool mini = name.size() > 5 && name.ends_with("-mini");
  const std::string base = mini ? name.substr(0, name.size() - 5) : name;
  if (base == "table1") {
    plan.method = PLCOH_DCCA;
    plan.blocks = {{{500}, {10, 20, 50}}, {{1000, 5000}, {10, 50, 100}}};
  } else if (base == "table2") {
    plan.method = PLCOH_HXA;
    plan.blocks = {{{500, 1000, 5000}, {20, 50, 100}}};
  } else if (base == "table3") {
    plan.method = PLCOH_DMCA;
    plan.blocks = {{{500, 1000, 5000}, {21, 51, 101}}};
  } else {
    throw CliError("--preset: unknown preset '" + name +
                   "' (expected table1[-mini], table2[-mini], table3[-mini])");
  }
  if (mini) plan.reps = 100;
  return plan;
}

void write_cell_rows(std::ofstream& out,
                     const std::vector<plcoh_cell_result>& rows,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const plcoh_cell_result& r = rows[i];
    out << plcoh_method_name(r.method) << "," << r.length << ","
        << r.option_value << "," << csv_num(r.rho23) << "," << csv_num(r.bias)
        << "," << csv_num(r.sd) << "," << csv_num(r.mse) << ","
        << r.n_effective << "," << r.failures << "\n";
  }
}

struct McArgs {
  std::string preset;
  std::string method_name;
  std::vector<std::size_t> lengths;
  std::vector<int> options;
  std::vector<double> rhos;
  int reps = 0;  // 0: preset default / 1000
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 0;
  bool jobs_given = false;
  std::string outdir = ".";
  plcoh_arfima_params generator{};
};

int resolved_jobs(const McArgs& args) {
  return args.jobs_given ? args.jobs : default_jobs_from_env();
}

int cmd_mc(McArgs& args) {
  const std::string started = now_iso8601();
  McPlan plan;
  if (!args.preset.empty()) {
    plan = preset_plan(args.preset);
    if (!args.method_name.empty() || !args.lengths.empty() ||
        !args.options.empty() || !args.rhos.empty()) {
      throw CliError(
          "--preset: cannot combine with --method/--lengths/--options/--rhos");
    }
  } else {
    if (args.method_name.empty()) {
      throw CliError("--method: required when no --preset is given");
    }
    plan.method = parse_method(args.method_name);
    plan.blocks = {{args.lengths.empty()
                        ? std::vector<std::size_t>{500, 1000, 5000}
                        : args.lengths,
                    args.options.empty() ? standard_option_axis(plan.method)
                                         : args.options}};
    if (!args.rhos.empty()) plan.rhos = args.rhos;
    plan.csv_name = std::string("mc_") + plcoh_method_name(plan.method) +
                    ".csv";
  }
  if (args.reps > 0) plan.reps = args.reps;
  if (!args.seed_given) {
    args.seed = fresh_seed();
    std::cerr << "note: --seed not given; using seed " << args.seed
              << " (recorded in the manifest)\n";
  }
  args.generator.seed = args.seed;
  const int jobs = resolved_jobs(args);

  std::filesystem::create_directories(args.outdir);
  const std::string csv_path =
      (std::filesystem::path(args.outdir) / plan.csv_name).string();
  std::ofstream out(csv_path);
  if (!out) throw CliError("--outdir: cannot open '" + csv_path + "'");
  out << "method,T,option,rho,bias,sd,mse,n_effective,failures\n";

  plcoh_estimate_options options{};
  plcoh_estimate_options_init(&options);

  json blocks_json = json::array();
  for (const TableBlock& block : plan.blocks) {
    const std::size_t n_cells =
        block.lengths.size() * block.options.size() * plan.rhos.size();
    std::vector<plcoh_cell_result> rows(n_cells);
    std::size_t n_rows = 0;
    require_ok(
        plcoh_mc_run_table(plan.method, &args.generator, &options,
                           block.lengths.data(), block.lengths.size(),
                           block.options.data(), block.options.size(),
                           plan.rhos.data(), plan.rhos.size(), plan.reps,
                           jobs, rows.data(), &n_rows),
        "mc");
    write_cell_rows(out, rows, n_rows);
    blocks_json.push_back(
        json{{"lengths", block.lengths}, {"options", block.options}});
  }
  if (!out.good()) throw CliError("failed writing '" + csv_path + "'");
  out.close();

  json parameters;
  parameters["method"] = plcoh_method_name(plan.method);
  parameters["preset"] = args.preset.empty() ? json(nullptr) : json(args.preset);
  parameters["blocks"] = blocks_json;
  parameters["rho23_values"] = plan.rhos;
  parameters["repetitions"] = plan.reps;
  parameters["jobs"] = jobs;
  parameters["seed"] = args.seed;
  parameters["generator"] = params_json(args.generator);
  write_manifest(manifest_path_for(csv_path), "mc", parameters, {csv_path},
                 started, now_iso8601());
  std::cout << "wrote " << csv_path << "\n";
  return 0;
}

struct SweepArgs {
  std::string preset;
  std::vector<std::size_t> lengths;
  int reps = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 0;
  bool jobs_given = false;
  std::string outdir = ".";
  plcoh_arfima_params generator{};
};

int cmd_sweep(SweepArgs& args) {
  const std::string started = now_iso8601();
  std::vector<std::size_t> lengths = args.lengths;
  int reps = args.reps;
  if (!args.preset.empty()) {
    if (args.preset == "figure1") {
      if (lengths.empty()) {
        lengths = {500, 1000, 2000, 5000, 10000, 20000, 50000, 100000};
      }
      if (reps == 0) reps = 1000;
    } else if (args.preset == "figure1-reduced") {
      if (lengths.empty()) lengths = {500, 2000, 8000, 32000};
      if (reps == 0) reps = 300;
    } else {
      throw CliError("--preset: unknown preset '" + args.preset +
                     "' (expected figure1 or figure1-reduced)");
    }
  }
  if (lengths.empty()) lengths = {500, 2000, 8000, 32000};
  if (reps == 0) reps = 300;
  if (!args.seed_given) {
    args.seed = fresh_seed();
    std::cerr << "note: --seed not given; using seed " << args.seed
              << " (recorded in the manifest)\n";
  }
  args.generator.seed = args.seed;
  const int jobs = args.jobs_given ? args.jobs : default_jobs_from_env();

  // NULL options = the sweep convention: defaults, with DCCA switched to
  // non-overlapping boxes on a linear scale grid (see plcoh_mc_run_sweep).
  std::vector<plcoh_cell_result> rows(3 * lengths.size());
  std::size_t n_rows = 0;
  double exponents[3] = {0.0, 0.0, 0.0};
  require_ok(plcoh_mc_run_sweep(&args.generator, nullptr, lengths.data(),
                                lengths.size(), reps, jobs, rows.data(),
                                &n_rows, exponents),
             "sweep");

  std::filesystem::create_directories(args.outdir);
  std::vector<std::string> outputs;
  const auto path_in_outdir = [&](const std::string& name) {
    return (std::filesystem::path(args.outdir) / name).string();
  };

  const std::string sweep_path = path_in_outdir("sweep.csv");
  {
    std::ofstream out(sweep_path);
    if (!out) throw CliError("--outdir: cannot open '" + sweep_path + "'");
    out << "method,T,option,rho,bias,sd,mse,n_effective,failures\n";
    write_cell_rows(out, rows, n_rows);
    if (!out.good()) throw CliError("failed writing '" + sweep_path + "'");
  }
  outputs.push_back(sweep_path);

  // Plot-ready per-method series: mean and variance against length.
  const plcoh_method methods[3] = {PLCOH_DCCA, PLCOH_DMCA, PLCOH_HXA};
  for (int m = 0; m < 3; ++m) {
    const std::string path = path_in_outdir(
        std::string("figure_") + plcoh_method_name(methods[m]) + ".csv");
    std::ofstream out(path);
    if (!out) throw CliError("--outdir: cannot open '" + path + "'");
    out << "T,mean,variance\n";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const plcoh_cell_result& r = rows[m * lengths.size() + i];
      out << r.length << "," << csv_num(r.mean) << "," << csv_num(r.sd * r.sd)
          << "\n";
    }
    if (!out.good()) throw CliError("failed writing '" + path + "'");
    outputs.push_back(path);
  }

  const std::string decay_path = path_in_outdir("variance_decay.csv");
  {
    std::ofstream out(decay_path);
    if (!out) throw CliError("--outdir: cannot open '" + decay_path + "'");
    out << "method,variance_decay_exponent\n";
    for (int m = 0; m < 3; ++m) {
      out << plcoh_method_name(methods[m]) << "," << csv_num(exponents[m])
          << "\n";
    }
    if (!out.good()) throw CliError("failed writing '" + decay_path + "'");
  }
  outputs.push_back(decay_path);

  json parameters;
  parameters["preset"] = args.preset.empty() ? json(nullptr) : json(args.preset);
  parameters["lengths"] = lengths;
  parameters["repetitions"] = reps;
  parameters["jobs"] = jobs;
  parameters["seed"] = args.seed;
  parameters["rho23"] = 1.0;
  parameters["generator"] = params_json(args.generator);
  parameters["estimator"] =
      "sweep convention: best options per method; dcca with non-overlapping "
      "boxes on a linear scale grid (step 10)";
  write_manifest(path_in_outdir("sweep.manifest.json"), "sweep", parameters,
                 outputs, started, now_iso8601());
  for (int m = 0; m < 3; ++m) {
    std::cout << plcoh_method_name(methods[m])
              << " variance decay exponent: " << human_num(exponents[m])
              << "\n";
  }
  std::cout << "wrote " << outputs.size() << " files to " << args.outdir
            << "\n";
  return 0;
}

void add_estimator_flags(CLI::App* cmd, plcoh_estimate_options* options,
                         bool* jackknife) {
  cmd->add_option("--smin", options->s_min, "DCCA: smallest box size");
  cmd->add_option("--smax", options->s_max,
                  "DCCA: largest box size (0: length/5)");
  cmd->add_option("--boxstep", options->box_step,
                  "DCCA: stride between box starts (0: non-overlapping)");
  cmd->add_option("--scales-per-decade", options->scales_per_decade,
                  "DCCA: log-spaced grid density");
  cmd->add_option("--sstep", options->s_step,
                  "DCCA: use a linear scale grid with this step instead of "
                  "the log-spaced one");
  cmd->add_option("--kmax", options->kappa_max,
                  "DMCA: largest moving-average window (odd)");
  cmd->add_option("--taumax", options->tau_max, "HXA: largest lag");
  cmd->add_flag("--jackknife,!--no-jackknife", *jackknife,
                "HXA: average fits over lag cutoffs 5..taumax (default on)");
}

void add_generator_flags(CLI::App* cmd, plcoh_arfima_params* params) {
  cmd->add_option("--d1", params->d1, "memory of x, component 1");
  cmd->add_option("--d2", params->d2, "memory of x, component 2");
  cmd->add_option("--d3", params->d3, "memory of y, component 1");
  cmd->add_option("--d4", params->d4, "memory of y, component 2");
  cmd->add_option("--ntrunc", params->n_trunc,
                  "MA truncation lag (0: automatic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-law coherency toolkit: generation, estimation, and "
               "Monte Carlo studies for pairs of long-memory series"};
  app.require_subcommand(1);

  GenerateArgs gen;
  plcoh_arfima_params_init(&gen.params);
  CLI::App* generate = app.add_subcommand(
      "generate", "simulate a correlated long-memory pair to CSV");
  add_generator_flags(generate, &gen.params);
  generate->add_option("--rho", gen.params.rho23,
                       "innovation correlation in [-1, 1]");
  generate->add_option("--length", gen.params.length, "series length");
  generate
      ->add_option("--seed", gen.params.seed,
                   "RNG seed (omitted: chosen and recorded)")
      ->each([&](const std::string&) { gen.seed_given = true; });
  generate->add_option("--out", gen.out, "output CSV path")->required();

  EstimateArgs est;
  plcoh_estimate_options_init(&est.options);
  CLI::App* estimate = app.add_subcommand(
      "estimate", "estimate H_rho (and H_x, H_y, H_xy) from a two-column CSV");
  estimate->add_option("--input", est.input, "input CSV with x,y columns")
      ->required();
  estimate->add_option("--method", est.method_name, "dcca | dmca | hxa")
      ->required();
  add_estimator_flags(estimate, &est.options, &est.jackknife);
  estimate->add_option("--emit-profile", est.emit_profile,
                       "write the scale,rho2 profile to this CSV");

  FluctuationArgs fluct;
  plcoh_estimate_options_init(&fluct.options);
  CLI::App* fluctuation = app.add_subcommand(
      "fluctuation", "write the scale,value cross profile for one method");
  fluctuation->add_option("--input", fluct.input, "input CSV with x,y columns")
      ->required();
  fluctuation->add_option("--method", fluct.method_name, "dcca | dmca | hxa")
      ->required();
  add_estimator_flags(fluctuation, &fluct.options, &fluct.jackknife);
  fluctuation->add_option("--out", fluct.out, "output CSV path")->required();

  McArgs mc;
  plcoh_arfima_params_init(&mc.generator);
  CLI::App* mc_cmd = app.add_subcommand(
      "mc", "Monte Carlo bias/SD/MSE tables over a parameter grid");
  mc_cmd->add_option("--preset", mc.preset,
                     "table1 | table2 | table3 (add -mini for a quick run)");
  mc_cmd->add_option("--method", mc.method_name,
                     "dcca | dmca | hxa (explicit grid mode)");
  mc_cmd->add_option("--lengths", mc.lengths, "series lengths");
  mc_cmd->add_option("--options", mc.options,
                     "option axis values (smin | kmax | taumax per method)");
  mc_cmd->add_option("--rhos", mc.rhos, "innovation correlations");
  mc_cmd->add_option("--reps", mc.reps, "repetitions per cell");
  mc_cmd->add_option("--seed", mc.seed, "base seed (omitted: chosen and recorded)")
      ->each([&](const std::string&) { mc.seed_given = true; });
  mc_cmd->add_option("--jobs", mc.jobs,
                     "worker threads (0: hardware; env PLCOH_JOBS)")
      ->each([&](const std::string&) { mc.jobs_given = true; });
  mc_cmd->add_option("--outdir", mc.outdir, "output directory");
  add_generator_flags(mc_cmd, &mc.generator);

  SweepArgs sweep;
  plcoh_arfima_params_init(&sweep.generator);
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep",
      "length sweep at rho23=1: per-length bias/variance and decay exponents");
  sweep_cmd->add_option("--preset", sweep.preset,
                        "figure1 | figure1-reduced");
  sweep_cmd->add_option("--lengths", sweep.lengths, "series lengths");
  sweep_cmd->add_option("--reps", sweep.reps, "repetitions per cell");
  sweep_cmd
      ->add_option("--seed", sweep.seed,
                   "base seed (omitted: chosen and recorded)")
      ->each([&](const std::string&) { sweep.seed_given = true; });
  sweep_cmd
      ->add_option("--jobs", sweep.jobs,
                   "worker threads (0: hardware; env PLCOH_JOBS)")
      ->each([&](const std::string&) { sweep.jobs_given = true; });
  sweep_cmd->add_option("--outdir", sweep.outdir, "output directory");
  add_generator_flags(sweep_cmd, &sweep.generator);

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (estimate->parsed()) return cmd_estimate(est);
    if (fluctuation->parsed()) return cmd_fluctuation(fluct);
    if (mc_cmd->parsed()) return cmd_mc(mc);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
