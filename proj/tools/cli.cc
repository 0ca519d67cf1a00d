/* Copyright 2026 The EcoRoute Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.h"

#ifdef ECOROUTE_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ecoroute/error.h"
#include "ecoroute/measurements.h"
#include "ecoroute/models.h"
#include "ecoroute/powertrace.h"
#include "ecoroute/profiles.h"
#include "ecoroute/scheduler.h"
#include "ecoroute/stats.h"
#include "ecoroute/workload.h"

namespace ecoroute::cli {
namespace {

constexpr const char* kWorkloadSchema =
    "Workload CSV: header `tau_in,tau_out`, one query per row, nonnegative\n"
    "  integer token counts, (0,0) rejected.";
constexpr const char* kProfileSchema =
    "Profile document: one `[[model]]` block per model with\n"
    "  name = \"...\"             quoted, unique\n"
    "  accuracy_const = F       average accuracy in percent, (0, 100]\n"
    "  alpha = [a0, a1, a2]     energy J = a0*tau_in + a1*tau_out + a2*tau_in*tau_out\n"
    "  beta = [b0, b1, b2]      runtime s, same form\n"
    "  gamma = F                optional capacity fraction in (0, 1]\n"
    "  Lines starting with # are comments.";
constexpr const char* kMeasurementSchema =
    "Measurement CSV: header `model,tau_in,tau_out,energy_j,runtime_s,trial`.";

std::string fixed6(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string sci6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

// Quotes a CSV field when it would otherwise split or confuse a reader.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os, bool markdown) const {
    if (!markdown) {
      write_row(os, header);
      for (const auto& r : rows) write_row(os, r);
      return;
    }
    os << '|';
    for (const auto& h : header) os << ' ' << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& r : rows) {
      os << '|';
      for (const auto& c : r) os << ' ' << c << " |";
      os << '\n';
    }
  }

 private:
  static void write_row(std::ostream& os, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ',';
      os << csv_field(r[i]);
    }
    os << '\n';
  }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  return in;
}

// Writes to `path` if given, otherwise to the default stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
    os_ = file_.get();
  }

  std::ostream& stream() { return *os_; }

  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw Error(ErrorKind::kIo, "failed writing output file");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

Workload load_workload(const std::string& path) {
  auto in = open_input(path);
  return parse_workload(in);
}

Fleet load_profiles(const std::string& path) {
  auto in = open_input(path);
  return parse_profiles(in);
}

std::vector<MeasurementRecord> load_measurements(const std::string& path) {
  auto in = open_input(path);
  return parse_measurements(in);
}

std::vector<Metric> metrics_for(const std::string& which) {
  if (which == "energy") return {Metric::kEnergy};
  if (which == "runtime") return {Metric::kRuntime};
  return {Metric::kEnergy, Metric::kRuntime};
}

std::vector<stats::RegressionRow> regression_rows(
    const std::vector<MeasurementRecord>& records, Metric metric) {
  std::vector<stats::RegressionRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    rows.push_back({static_cast<double>(r.tau_in), static_cast<double>(r.tau_out),
                    metric_value(r, metric)});
  }
  return rows;
}

std::string optional_stat(const std::optional<double>& v) {
  return v ? sci6(*v) : std::string();
}

// ---------------------------------------------------------------------------
// fit

struct FitOptions {
  std::string measurements;
  std::string metric = "both";
  std::string out;
  bool markdown = false;
};

void run_fit(const FitOptions& o, std::ostream& out) {
  const auto records = load_measurements(o.measurements);
  if (records.empty()) throw Error(ErrorKind::kInvalidArgument, "no measurement rows");
  const auto groups = group_by_model(records);
  Table table{{"metric", "model", "a0", "a1", "a2", "r2", "f", "p"}, {}};
  for (Metric metric : metrics_for(o.metric)) {
    for (const auto& [name, rows] : groups) {
      stats::FitResult fit;
      try {
        fit = stats::ols_fit_no_intercept(regression_rows(rows, metric));
      } catch (const Error& e) {
        throw Error(e.kind(), "model '" + name + "': " + e.what());
      }
      table.rows.push_back({std::string(to_string(metric)), name, sci6(fit.coeffs[0]),
                            sci6(fit.coeffs[1]), sci6(fit.coeffs[2]), fixed6(fit.r_squared),
                            sci6(fit.f_statistic), sci6(fit.p_value)});
    }
  }
  Output sink(o.out, out);
  table.write(sink.stream(), o.markdown);
  sink.close();
}

// ---------------------------------------------------------------------------
// anova

struct AnovaOptions {
  std::string measurements;
  std::string metric = "both";
  std::string model;
  std::string out;
  bool markdown = false;
};

void run_anova(const AnovaOptions& o, std::ostream& out) {
  auto records = load_measurements(o.measurements);
  if (!o.model.empty()) {
    std::erase_if(records, [&](const auto& r) { return r.model_name != o.model; });
    if (records.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "no rows for model '" + o.model + "'");
    }
  }
  Table table{{"metric", "source", "sum_sq", "df", "f", "p"}, {}};
  for (Metric metric : metrics_for(o.metric)) {
    const auto grid = stats::BalancedGrid::from_rows(regression_rows(records, metric));
    const auto t = stats::two_way_anova(grid);
    const std::string m(to_string(metric));
    const std::pair<const char*, const stats::AnovaRow*> sources[] = {
        {"input_tokens", &t.factor_a},
        {"output_tokens", &t.factor_b},
        {"interaction", &t.interaction},
        {"residual", &t.error}};
    for (const auto& [label, row] : sources) {
      table.rows.push_back({m, label, sci6(row->sum_squares), std::to_string(row->dof),
                            optional_stat(row->f_statistic),
                            optional_stat(row->p_value)});
    }
    table.rows.push_back({m, "total", sci6(t.total_sum_squares),
                          std::to_string(t.total_dof), "", ""});
  }
  Output sink(o.out, out);
  table.write(sink.stream(), o.markdown);
  sink.close();
}

// ---------------------------------------------------------------------------
// route

struct RouteOptions {
  std::string profiles;
  std::string workload;
  double zeta = 0.5;
  std::size_t min_per_model = 1;
  bool use_gamma = false;
  std::string baseline;
  std::optional<std::uint64_t> seed;
  std::string out;
};

RoutingConstraints constraints_from(std::size_t min_per_model, bool use_gamma) {
  return {min_per_model, use_gamma ? CapacityMode::kFractionCap : CapacityMode::kUnbounded};
}

std::size_t resolve_model(const Fleet& fleet, const std::string& key) {
  for (std::size_t k = 0; k < fleet.size(); ++k) {
    if (fleet[k].name == key) return k;
  }
  std::size_t idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoul(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw Error(ErrorKind::kInvalidArgument, "unknown model '" + key + "'");
  }
  if (idx >= fleet.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "model index " + key + " out of range for a fleet of " +
                    std::to_string(fleet.size()));
  }
  return idx;
}

void run_route(const RouteOptions& o, std::ostream& out) {
  const auto fleet = load_profiles(o.profiles);
  const auto workload = load_workload(o.workload);
  const auto constraints = constraints_from(o.min_per_model, o.use_gamma);

  std::optional<Assignment> assignment;
  if (o.baseline.empty()) {
    assignment = solve_offline(fleet, workload, o.zeta, constraints).assignment;
  } else if (o.baseline == "roundrobin") {
    assignment = round_robin(workload, fleet);
  } else if (o.baseline == "random") {
    assignment = random_assign(workload, fleet, *o.seed);
  } else {
    assignment = single_model(workload, fleet, resolve_model(fleet, o.baseline.substr(7)));
  }
  const auto metrics = evaluate(*assignment, fleet, workload, o.zeta);

  Output sink(o.out, out);
  auto& os = sink.stream();
  os << "query_index,model\n";
  for (std::size_t i = 0; i < workload.size(); ++i) {
    os << i << ',' << csv_field(fleet[assignment->model_of(i)].name) << '\n';
  }
  os << "# zeta=" << fixed6(o.zeta) << '\n';
  os << "# objective=" << fixed6(metrics.objective_value) << '\n';
  os << "# total_energy_j=" << fixed6(metrics.total_energy_j) << '\n';
  os << "# mean_runtime_s=" << fixed6(metrics.mean_runtime_s) << '\n';
  os << "# total_accuracy=" << fixed6(metrics.total_accuracy) << '\n';
  for (std::size_t k = 0; k < fleet.size(); ++k) {
    os << "# count[" << fleet[k].name << "]=" << metrics.per_model_counts[k] << '\n';
  }
  sink.close();
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::string profiles;
  std::string workload;
  std::string grid = "0:1:0.1";
  std::size_t min_per_model = 1;
  bool use_gamma = false;
  std::size_t jobs = 1;
  std::string out;
  bool markdown = false;
};

std::vector<double> parse_grid(const std::string& spec) {
  double v[3];
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto colon = spec.find(':', start);
    if ((i < 2) != (colon != std::string::npos)) {
      throw Error(ErrorKind::kInvalidArgument, "grid must be LO:HI:STEP, got '" + spec + "'");
    }
    const auto part = spec.substr(start, colon == std::string::npos ? std::string::npos
                                                                    : colon - start);
    try {
      std::size_t used = 0;
      v[i] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidArgument, "grid must be LO:HI:STEP, got '" + spec + "'");
    }
    start = colon + 1;
  }
  return make_grid(v[0], v[1], v[2]);
}

void run_sweep(const SweepOptions& o, std::ostream& out) {
  const auto fleet = load_profiles(o.profiles);
  const auto workload = load_workload(o.workload);
  const auto grid = parse_grid(o.grid);
  const auto rows = sweep_zeta(fleet, workload, constraints_from(o.min_per_model, o.use_gamma),
                               grid, o.jobs);
  Table table{{"zeta", "objective", "total_energy_j", "mean_runtime_s", "total_accuracy"}, {}};
  for (const auto& p : fleet) table.header.push_back("count_" + p.name);
  for (const auto& r : rows) {
    std::vector<std::string> row{fixed6(r.zeta), fixed6(r.metrics.objective_value),
                                 fixed6(r.metrics.total_energy_j),
                                 fixed6(r.metrics.mean_runtime_s),
                                 fixed6(r.metrics.total_accuracy)};
    for (auto c : r.metrics.per_model_counts) row.push_back(std::to_string(c));
    table.rows.push_back(std::move(row));
  }
  Output sink(o.out, out);
  table.write(sink.stream(), o.markdown);
  sink.close();
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string dist;
  std::string dist_out;
  std::string out;
};

void run_gen(const GenOptions& o, std::ostream& out) {
  const auto in_dist = parse_distribution(o.dist);
  const auto out_dist = o.dist_out.empty() ? in_dist : parse_distribution(o.dist_out);
  const auto workload = generate_workload(o.count, in_dist, out_dist, o.seed);
  Output sink(o.out, out);
  write_workload(sink.stream(), workload);
  sink.close();
}

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
  std::string profiles;
  std::string levels = "8:2048";
  std::uint32_t trials = 3;
  double noise = 0.05;
  std::uint64_t seed = 0;
  std::string out;
};

void run_synth(const SynthOptions& o, std::ostream& out) {
  const auto fleet = load_profiles(o.profiles);
  const auto colon = o.levels.find(':');
  CampaignSpec spec;
  try {
    if (colon == std::string::npos) throw std::invalid_argument(o.levels);
    spec.levels = power_of_two_levels(static_cast<std::uint32_t>(std::stoul(o.levels.substr(0, colon))),
                                      static_cast<std::uint32_t>(std::stoul(o.levels.substr(colon + 1))));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::kInvalidArgument, "levels must be LO:HI, got '" + o.levels + "'");
  }
  spec.trials = o.trials;
  spec.relative_noise = o.noise;
  spec.seed = o.seed;
  const auto records = synthesize_measurements(fleet, spec);
  Output sink(o.out, out);
  write_measurements(sink.stream(), records);
  sink.close();
}

// ---------------------------------------------------------------------------
// power

struct PowerOptions {
  std::string timechart;
  std::string residency;
  double gpu_joules = 0.0;
  std::string out;
};

void run_power(const PowerOptions& o, std::ostream& out) {
  auto trace_in = open_input(o.timechart);
  const auto trace = powertrace::parse_timechart(trace_in);
  auto residency_in = open_input(o.residency);
  const auto residency = powertrace::parse_residency(residency_in);
  const double cpu = powertrace::integrate_cpu_energy(trace, residency);
  Output sink(o.out, out);
  sink.stream() << "cpu_energy_j,gpu_energy_j,total_energy_j\n"
                << fixed6(cpu) << ',' << fixed6(o.gpu_joules) << ','
                << fixed6(powertrace::total_energy(cpu, o.gpu_joules)) << '\n';
  sink.close();
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::kIo ? kExitNoInput : kExitDataError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fit LLM inference energy models and route queries across a model fleet.",
               "ecoroute"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ecoroute 0.1.0");

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand(
      "fit", "Fit no-intercept bilinear token models per model (OLS on tau_in, tau_out, "
             "tau_in*tau_out) and report coefficients, uncentered R2, F and p.");
  fit_cmd->add_option("--measurements", fit.measurements, "Measurement CSV")->required();
  fit_cmd->add_option("--metric", fit.metric, "Response to fit")
      ->check(CLI::IsMember({"energy", "runtime", "both"}))
      ->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "Output CSV path (default: standard output)");
  fit_cmd->add_flag("--markdown", fit.markdown, "Render a markdown table instead of CSV");
  fit_cmd->footer(std::string(kMeasurementSchema) +
                  "\nOutput CSV: `metric,model,a0,a1,a2,r2,f,p`.");

  AnovaOptions anova;
  auto* anova_cmd = app.add_subcommand(
      "anova", "Two-way ANOVA with interaction of input and output token levels. Rows of all "
               "models (or one with --model) are pooled as replicates; the design must be "
               "balanced.");
  anova_cmd->add_option("--measurements", anova.measurements, "Measurement CSV")->required();
  anova_cmd->add_option("--metric", anova.metric, "Response to analyze")
      ->check(CLI::IsMember({"energy", "runtime", "both"}))
      ->capture_default_str();
  anova_cmd->add_option("--model", anova.model, "Only use rows of this model");
  anova_cmd->add_option("--out", anova.out, "Output CSV path (default: standard output)");
  anova_cmd->add_flag("--markdown", anova.markdown, "Render a markdown table instead of CSV");
  anova_cmd->footer(std::string(kMeasurementSchema) +
                    "\nOutput CSV: `metric,source,sum_sq,df,f,p` with sources input_tokens, "
                    "output_tokens, interaction, residual, total.");

  RouteOptions route;
  auto* route_cmd = app.add_subcommand(
      "route", "Assign every query to one model minimizing "
               "sum(zeta*energy/max_energy - (1-zeta)*accuracy/max_accuracy), or apply a "
               "baseline policy.");
  route_cmd->add_option("--profiles", route.profiles, "Profile document")->required();
  route_cmd->add_option("--workload", route.workload, "Workload CSV")->required();
  route_cmd->add_option("--zeta", route.zeta, "Energy weight in [0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  route_cmd->add_option("--min-per-model", route.min_per_model,
                        "Minimum queries per model")
      ->capture_default_str();
  route_cmd->add_flag("--use-gamma", route.use_gamma,
                      "Cap model K at ceil(gamma_K * m) queries (every profile needs gamma)");
  route_cmd->add_option("--baseline", route.baseline,
                        "Baseline instead of the optimizer: roundrobin, random (needs --seed) "
                        "or single:K with K a 0-based index or model name");
  route_cmd->add_option("--seed", route.seed, "Seed for --baseline random");
  route_cmd->add_option("--out", route.out, "Output path (default: standard output)");
  route_cmd->footer(std::string(kProfileSchema) + "\n" + kWorkloadSchema +
                    "\nOutput: CSV `query_index,model` followed by `# key=value` summary "
                    "lines (zeta, objective, total_energy_j, mean_runtime_s, total_accuracy, "
                    "per-model counts). Baselines ignore --min-per-model and --use-gamma.");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Solve the routing problem at every zeta of a grid and tabulate the tradeoff.");
  sweep_cmd->add_option("--profiles", sweep.profiles, "Profile document")->required();
  sweep_cmd->add_option("--workload", sweep.workload, "Workload CSV")->required();
  sweep_cmd->add_option("--grid", sweep.grid, "Zeta grid LO:HI:STEP inside [0, 1]")
      ->capture_default_str();
  sweep_cmd->add_option("--min-per-model", sweep.min_per_model, "Minimum queries per model")
      ->capture_default_str();
  sweep_cmd->add_flag("--use-gamma", sweep.use_gamma, "Enforce gamma capacity caps");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Parallel zeta evaluations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path (default: standard output)");
  sweep_cmd->add_flag("--markdown", sweep.markdown, "Render a markdown table instead of CSV");
  sweep_cmd->footer(std::string(kProfileSchema) + "\n" + kWorkloadSchema +
                    "\nOutput CSV: `zeta,objective,total_energy_j,mean_runtime_s,"
                    "total_accuracy,count_<model>...`, one row per grid point in order.");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic workload CSV.");
  gen_cmd->add_option("--count", gen.count, "Number of queries")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--dist", gen.dist,
                      "Token distribution: uniform:LO,HI or lognormal:MU,SIGMA,CAP")
      ->required();
  gen_cmd->add_option("--dist-out", gen.dist_out,
                      "Separate distribution for output tokens (default: --dist)");
  gen_cmd->add_option("--out", gen.out, "Output CSV path (default: standard output)");
  gen_cmd->footer(std::string(kWorkloadSchema) +
                  "\nLognormal draws are rounded and clamped to [1, CAP].");

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Synthesize a measurement campaign from profile coefficients (for testing).");
  synth_cmd->add_option("--profiles", synth.profiles, "Profile document")->required();
  synth_cmd->add_option("--levels", synth.levels,
                        "Power-of-two token levels LO:HI used for both tau_in and tau_out")
      ->capture_default_str();
  synth_cmd->add_option("--trials", synth.trials, "Replicates per grid cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--noise", synth.noise, "Relative Gaussian noise sd")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "Output CSV path (default: standard output)");
  synth_cmd->footer(std::string(kProfileSchema) + "\n" + kMeasurementSchema);

  PowerOptions power;
  auto* power_cmd = app.add_subcommand(
      "power", "Integrate per-core CPU power over the residency intervals of an inference "
               "run and add GPU energy.");
  power_cmd->add_option("--timechart", power.timechart, "Power timechart CSV")->required();
  power_cmd->add_option("--residency", power.residency, "Core residency CSV")->required();
  power_cmd->add_option("--gpu-joules", power.gpu_joules, "GPU energy in joules")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  power_cmd->add_option("--out", power.out, "Output CSV path (default: standard output)");
  power_cmd->footer(
      "Timechart CSV: header `time_s,core_id,power_w`; each sample holds until the next one "
      "of the same core, times strictly increasing per core.\n"
      "Residency CSV: header `core_id,start_s,end_s`; non-overlapping intervals per core.\n"
      "Output CSV: `cpu_energy_j,gpu_energy_j,total_energy_j`.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fit_cmd) {
      run_fit(fit, out);
    } else if (*anova_cmd) {
      run_anova(anova, out);
    } else if (*route_cmd) {
      const bool known = route.baseline.empty() || route.baseline == "roundrobin" ||
                         route.baseline == "random" ||
                         (route.baseline.rfind("single:", 0) == 0 && route.baseline.size() > 7);
      if (!known) {
        err << "ecoroute route: --baseline must be roundrobin, random or single:K\n";
        return kExitUsage;
      }
      if (route.baseline == "random" && !route.seed) {
        err << "ecoroute route: --baseline random requires --seed\n";
        return kExitUsage;
      }
      run_route(route, out);
    } else if (*sweep_cmd) {
      run_sweep(sweep, out);
    } else if (*gen_cmd) {
      run_gen(gen, out);
    } else if (*synth_cmd) {
      run_synth(synth, out);
    } else if (*power_cmd) {
      run_power(power, out);
    }
  } catch (const Error& e) {
    err << "ecoroute: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "ecoroute: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace ecoroute::cli
