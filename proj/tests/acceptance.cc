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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
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
#include "oracles.h"

namespace ecoroute {
namespace {

const std::string kRoot = ECOROUTE_SOURCE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a sub-check; the first failing one is kept in the detail line.
  void check(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = "failed: " + what;
    }
  }
};

std::string fmt(const char* format, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

double rel_err(double got, double want) { return std::fabs(got / want - 1.0); }

Fleet load_case_study() {
  std::ifstream in(kRoot + "/profiles/case_study.profile");
  return parse_profiles(in);
}

Workload load_fixture_workload() {
  std::ifstream in(kRoot + "/workloads/alpaca_like_500.csv");
  return parse_workload(in);
}

std::vector<stats::RegressionRow> energy_rows(const std::vector<MeasurementRecord>& records) {
  std::vector<stats::RegressionRow> rows;
  for (const auto& r : records) {
    rows.push_back({static_cast<double>(r.tau_in), static_cast<double>(r.tau_out), r.energy_j});
  }
  return rows;
}

// 1. Fit recovery on the power-of-two grid 8..2048.
Outcome fit_recovery() {
  Outcome o;
  const TokenCoeffs truth{1.0, 1.0, 0.003};
  const Fleet fleet{ModelProfile{"truth", 50.0, truth, truth, std::nullopt}};
  const auto levels = power_of_two_levels(8, 2048);

  const auto noisy = stats::ols_fit_no_intercept(
      energy_rows(synthesize_measurements(fleet, {levels, 25, 0.05, 2026})));
  double worst = 0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, rel_err(noisy.coeffs[i], truth[i]));
  o.check(worst <= 0.03, "noisy coefficient error " + fmt("%.4f", worst) + " > 0.03");
  o.check(noisy.r_squared >= 0.96, "noisy R2 " + fmt("%.6f", noisy.r_squared) + " < 0.96");

  const auto exact = stats::ols_fit_no_intercept(
      energy_rows(synthesize_measurements(fleet, {levels, 1, 0.0, 0})));
  double worst_exact = 0;
  for (int i = 0; i < 3; ++i) worst_exact = std::max(worst_exact, rel_err(exact.coeffs[i], truth[i]));
  o.check(std::fabs(exact.r_squared - 1.0) <= 1e-12, "noiseless R2 not 1 within 1e-12");
  o.check(worst_exact <= 1e-9, "noiseless coefficient error " + fmt("%.3g", worst_exact));
  if (o.pass) {
    o.detail = "max coef err " + fmt("%.4f", worst) + ", R2 " + fmt("%.6f", noisy.r_squared) +
               "; noiseless R2-1 " + fmt("%.1e", exact.r_squared - 1.0) + ", coef err " +
               fmt("%.1e", worst_exact);
  }
  return o;
}

stats::BalancedGrid grid_from(const std::vector<double>& a_levels,
                              const std::vector<double>& b_levels, std::size_t reps,
                              const std::function<double(double, double)>& mean,
                              double noise_sd, std::mt19937_64& rng) {
  std::normal_distribution<double> noise(0.0, noise_sd);
  std::vector<std::vector<std::vector<double>>> cells(
      a_levels.size(), std::vector<std::vector<double>>(b_levels.size()));
  for (std::size_t i = 0; i < a_levels.size(); ++i) {
    for (std::size_t j = 0; j < b_levels.size(); ++j) {
      for (std::size_t r = 0; r < reps; ++r) {
        cells[i][j].push_back(mean(a_levels[i], b_levels[j]) + noise(rng));
      }
    }
  }
  return stats::BalancedGrid(std::move(cells));
}

// 2. ANOVA partition identity, interaction power and null calibration.
Outcome anova_correctness() {
  Outcome o;
  double worst_partition = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t a = 2 + rng() % 5;
    const std::size_t b = 2 + rng() % 5;
    const std::size_t r = 2 + rng() % 4;
    std::vector<double> la(a);
    std::vector<double> lb(b);
    std::iota(la.begin(), la.end(), 0.0);
    std::iota(lb.begin(), lb.end(), 0.0);
    std::uniform_real_distribution<double> effect(-50.0, 50.0);
    std::vector<double> ea(a);
    std::vector<double> eb(b);
    for (auto& e : ea) e = effect(rng);
    for (auto& e : eb) e = effect(rng);
    const auto grid = grid_from(
        la, lb, r,
        [&](double i, double j) {
          return 1000.0 + ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(j)];
        },
        1.0 + static_cast<double>(seed % 7), rng);
    const auto t = stats::two_way_anova(grid);
    const double sum = t.factor_a.sum_squares + t.factor_b.sum_squares +
                       t.interaction.sum_squares + t.error.sum_squares;
    worst_partition = std::max(worst_partition, rel_err(sum, t.total_sum_squares));
  }
  o.check(worst_partition <= 1e-9, "partition identity error " + fmt("%.3g", worst_partition));

  std::vector<double> levels;
  for (const auto l : power_of_two_levels(8, 2048)) levels.push_back(l);
  std::mt19937_64 rng(77);
  const auto interaction = stats::two_way_anova(
      grid_from(levels, levels, 2, [](double x, double y) { return x * y; }, 1000.0, rng));
  const double p_interaction = *interaction.interaction.p_value;
  o.check(p_interaction < 0.01, "interaction p " + fmt("%.3g", p_interaction));

  std::vector<double> null_p;
  for (int sim = 0; sim < 500; ++sim) {
    const auto t = stats::two_way_anova(grid_from(
        levels, levels, 2, [](double x, double y) { return 0.01 * x + 0.02 * y; }, 1.0, rng));
    null_p.push_back(*t.interaction.p_value);
  }
  const double ks_p = testing::ks_uniform_p_value(null_p);
  o.check(ks_p > 0.01, "null interaction p-values not uniform, KS p " + fmt("%.4f", ks_p));
  if (o.pass) {
    o.detail = "partition err " + fmt("%.1e", worst_partition) + ", interaction p " +
               fmt("%.1e", p_interaction) + ", null KS p " + fmt("%.3f", ks_p);
  }
  return o;
}

// 3. F and t kernels.
Outcome distribution_kernel() {
  Outcome o;
  double worst_median = 0;
  for (int d = 1; d <= 20; ++d) {
    worst_median = std::max(worst_median, std::fabs(stats::f_cdf(1.0, d, d) - 0.5));
  }
  o.check(worst_median <= 1e-12, "f_cdf(1,d,d) off by " + fmt("%.3g", worst_median));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dof(1, 30);
  std::uniform_real_distribution<double> xs(0.01, 8.0);
  double worst_quad = 0;
  for (int i = 0; i < 50; ++i) {
    const double x = xs(rng);
    const double d1 = dof(rng);
    const double d2 = dof(rng);
    worst_quad = std::max(worst_quad, std::fabs(stats::f_cdf(x, d1, d2) -
                                                testing::f_cdf_quadrature(x, d1, d2)));
  }
  o.check(worst_quad <= 1e-10, "f_cdf vs quadrature off by " + fmt("%.3g", worst_quad));

  const double t = stats::t_quantile(0.975, 1);
  o.check(std::fabs(t - 12.7062) <= 1e-3, "t_quantile(0.975, 1) = " + fmt("%.6f", t));
  if (o.pass) {
    o.detail = "median err " + fmt("%.1e", worst_median) + ", quadrature err " +
               fmt("%.1e", worst_quad) + ", t(0.975,1) " + fmt("%.6f", t);
  }
  return o;
}

// 4. Exact solver against exhaustive search.
Outcome solver_exactness() {
  Outcome o;
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 200 && o.pass; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(0.01, 5.0);
    std::uniform_real_distribution<double> acc(30.0, 80.0);
    const std::size_t k = 1 + rng() % 3;
    const std::size_t m = std::max<std::size_t>(k, 1 + rng() % 8);
    std::vector<double> gammas(k);
    for (auto& g : gammas) g = 0.2 + coeff(rng);
    const double gamma_sum = std::accumulate(gammas.begin(), gammas.end(), 0.0);
    Fleet fleet;
    for (std::size_t j = 0; j < k; ++j) {
      fleet.push_back({"m" + std::to_string(j), acc(rng),
                       {coeff(rng), coeff(rng), coeff(rng) * 1e-3},
                       {coeff(rng), coeff(rng), coeff(rng) * 1e-3},
                       gammas[j] / gamma_sum});
    }
    const auto w = generate_workload(m, UniformTokens{1, 512}, rng());
    const double zeta = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const RoutingConstraints constraints{
        rng() % 2, rng() % 2 == 0 ? CapacityMode::kUnbounded : CapacityMode::kFractionCap};
    const auto bounds = count_bounds(fleet, m, constraints);
    const auto exact = solve_offline(fleet, w, zeta, constraints);
    const auto oracle = brute_force(fleet, w, zeta, constraints);
    const double gap = std::fabs(exact.metrics.objective_value - oracle.metrics.objective_value);
    worst = std::max(worst, gap);
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    o.check(gap <= 1e-9, "objective gap " + fmt("%.3g", gap) + tag);

    const auto& a = exact.assignment;
    o.check(a.num_queries() == m && a.num_models() == k, "assignment shape" + tag);
    const auto counts = a.counts();
    o.check(std::accumulate(counts.begin(), counts.end(), std::size_t{0}) == m,
            "partition does not cover the workload" + tag);
    std::vector<std::size_t> seen(m, 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (auto q : a.queries_of(j)) ++seen[q];
      o.check(counts[j] >= bounds.lower[j], "min-per-model violated" + tag);
      o.check(counts[j] <= bounds.upper[j], "capacity cap violated" + tag);
    }
    o.check(std::all_of(seen.begin(), seen.end(), [](auto s) { return s == 1; }),
            "query not assigned exactly once" + tag);
  }
  if (o.pass) o.detail = "200 instances, max objective gap " + fmt("%.1e", worst);
  return o;
}

// 5. Case-study sweep shape.
Outcome case_study() {
  Outcome o;
  const auto fleet = load_case_study();
  const auto w = load_fixture_workload();
  o.check(w.size() == 500, "fixture workload is not 500 queries");
  const auto grid = make_grid(0.0, 1.0, 0.1);
  o.check(grid.size() == 11, "grid is not 11 points");

  const RoutingConstraints capped{1, CapacityMode::kFractionCap};
  const auto rows = sweep_zeta(fleet, w, capped, grid);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& prev = rows[i - 1].metrics;
    const auto& cur = rows[i].metrics;
    o.check(cur.total_energy_j <= prev.total_energy_j * (1 + 1e-12),
            "(a) energy rises at zeta " + fmt("%.1f", rows[i].zeta));
    o.check(cur.total_accuracy <= prev.total_accuracy * (1 + 1e-12),
            "(b) accuracy rises at zeta " + fmt("%.1f", rows[i].zeta));
  }

  // Baselines ignore caps and minimums, so dominance is checked in the
  // constraint set where all of them are feasible.
  const RoutingConstraints open{0, CapacityMode::kUnbounded};
  std::vector<Assignment> baselines{round_robin(w, fleet), random_assign(w, fleet, 3)};
  for (std::size_t k = 0; k < fleet.size(); ++k) baselines.push_back(single_model(w, fleet, k));
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& row : sweep_zeta(fleet, w, open, grid)) {
    for (const auto& b : baselines) {
      const double margin =
          evaluate(b, fleet, w, row.zeta).objective_value - row.metrics.objective_value;
      min_margin = std::min(min_margin, margin);
      o.check(margin >= -1e-9, "(c) a baseline beats the solver at zeta " + fmt("%.1f", row.zeta));
    }
  }

  std::vector<Query> head(w.begin(), w.begin() + 8);
  const Workload small(head);
  const auto small_rows = sweep_zeta(fleet, small, capped, grid);
  const auto best = brute_force(fleet, small, 0.0, capped);
  const double gap = std::fabs(small_rows.front().metrics.total_accuracy -
                               best.metrics.total_accuracy);
  o.check(gap <= 1e-9 * best.metrics.total_accuracy, "(d) zeta=0 accuracy below brute force");
  if (o.pass) {
    o.detail = "energy " + fmt("%.0f", rows.front().metrics.total_energy_j) + " -> " +
               fmt("%.0f", rows.back().metrics.total_energy_j) + " J, accuracy " +
               fmt("%.0f", rows.front().metrics.total_accuracy) + " -> " +
               fmt("%.0f", rows.back().metrics.total_accuracy) + ", min baseline margin " +
               fmt("%.3g", min_margin) + ", 8-query zeta=0 accuracy matches brute force";
  }
  return o;
}

// 6. Round robin versus random assignment.
Outcome baseline_indistinguishability() {
  Outcome o;
  const auto fleet = load_case_study();
  const auto w = load_fixture_workload();
  const double rr = evaluate(round_robin(w, fleet), fleet, w, 0.5).total_energy_j;
  double average = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    average += evaluate(random_assign(w, fleet, seed), fleet, w, 0.5).total_energy_j;
  }
  average /= 20;
  const double diff = rel_err(average, rr);
  o.check(diff <= 0.02, "relative difference " + fmt("%.4f", diff) + " > 0.02");
  if (o.pass) {
    o.detail = "round robin " + fmt("%.0f", rr) + " J, random mean " + fmt("%.0f", average) +
               " J, diff " + fmt("%.2f%%", 100 * diff);
  }
  return o;
}

// 7. CPU power integration.
Outcome power_integration() {
  using namespace powertrace;
  Outcome o;
  std::vector<PowerSample> constant;
  for (int i = 0; i <= 100; ++i) constant.push_back({i * 0.1, 0, 100.0});
  const double full = integrate_cpu_energy(constant, std::vector<ResidencyInterval>{{0, 0, 10}});
  o.check(full == 1000.0, "constant trace gave " + fmt("%.17g", full));

  const std::vector<PowerSample> steps{{0, 0, 100}, {1, 0, 100}, {2, 0, 100}, {3, 0, 100}};
  const double clipped =
      integrate_cpu_energy(steps, std::vector<ResidencyInterval>{{0, 0.5, 1.5}});
  o.check(std::fabs(clipped - 100.0) <= 1e-9, "clipped case gave " + fmt("%.17g", clipped));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> watts(0.0, 200.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PowerSample> trace;
    const std::uint32_t cores = 1 + rng() % 4;
    for (std::uint32_t c = 0; c < cores; ++c) {
      double t = 0;
      for (int i = 0; i < 20; ++i) {
        trace.push_back({t, c, watts(rng)});
        t += 0.01 + std::uniform_real_distribution<double>(0, 1)(rng);
      }
    }
    std::vector<ResidencyInterval> residency;
    for (std::uint32_t c = 0; c < cores; ++c) {
      const double start = std::uniform_real_distribution<double>(0, 5)(rng);
      residency.push_back({c, start, start + std::uniform_real_distribution<double>(0.1, 8)(rng)});
    }
    const double c = scale(rng);
    auto scaled = trace;
    for (auto& s : scaled) s.power_w *= c;
    const double base = integrate_cpu_energy(trace, residency);
    const double got = integrate_cpu_energy(scaled, residency);
    if (base > 0) worst = std::max(worst, rel_err(got, c * base));
  }
  o.check(worst <= 1e-12, "linearity error " + fmt("%.3g", worst));
  if (o.pass) {
    o.detail = "1000 J exact, clipped " + fmt("%.12g", clipped) + " J, linearity err " +
               fmt("%.1e", worst);
  }
  return o;
}

// 8. Adaptive trial stopping.
Outcome stopping_rule() {
  using namespace powertrace;
  Outcome o;
  std::vector<double> runtimes;
  std::size_t stopped_at = 0;
  Verdict verdict = Verdict::kContinue;
  for (std::size_t n = 1; n <= 25 && verdict == Verdict::kContinue; ++n) {
    runtimes.push_back(3.25);
    verdict = stopping_decision(runtimes).verdict;
    stopped_at = n;
  }
  o.check(verdict == Verdict::kStopConfident && stopped_at == 2,
          "zero-variance stream stopped at n=" + std::to_string(stopped_at));

  runtimes.clear();
  verdict = Verdict::kContinue;
  std::size_t adversarial_stop = 0;
  for (std::size_t n = 1; n <= 100 && verdict == Verdict::kContinue; ++n) {
    runtimes.push_back(n % 2 == 0 ? 100.0 : 1.0);
    verdict = stopping_decision(runtimes).verdict;
    adversarial_stop = n;
  }
  o.check(verdict == Verdict::kStopMaxTrials && adversarial_stop == 25,
          "adversarial stream stopped at n=" + std::to_string(adversarial_stop));
  if (o.pass) o.detail = "zero variance stops at n=2, adversarial stream at n=25 (max trials)";
  return o;
}

}  // namespace
}  // namespace ecoroute

int main() {
  using namespace ecoroute;
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {{"fit recovery", fit_recovery},
                                {"anova correctness", anova_correctness},
                                {"distribution kernel", distribution_kernel},
                                {"solver exactness", solver_exactness},
                                {"case-study shape", case_study},
                                {"baseline indistinguishability", baseline_indistinguishability},
                                {"power integration", power_integration},
                                {"stopping rule", stopping_rule}};
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", index, c.name,
                outcome.detail.c_str(), secs);
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
