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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ecoroute/types.h"

namespace ecoroute::stats {

// ---------------------------------------------------------------------------
// Distribution functions
// ---------------------------------------------------------------------------

// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1]. Lentz's
// continued fraction, evaluated on the side of the symmetry
// I_x(a, b) = 1 - I_{1-x}(b, a) where it converges fast
// (x <= (a + 1) / (a + b + 2)). Tolerance 1e-14, at most 300 iterations.
double incomplete_beta(double x, double a, double b);

// CDF of the F(d1, d2) distribution. Throws on x < 0 or non-positive dof.
double f_cdf(double x, double d1, double d2);
// Upper tail 1 - f_cdf, computed without cancellation. This is the p-value
// of an F test.
double f_sf(double x, double d1, double d2);

double t_cdf(double t, double dof);
// Inverse of t_cdf for p in (0, 1).
double t_quantile(double p, double dof);

// ---------------------------------------------------------------------------
// No-intercept OLS on the bilinear token model
// ---------------------------------------------------------------------------

struct RegressionRow {
  double tau_in = 0.0;
  double tau_out = 0.0;
  double response = 0.0;
};

// Regressors are [tau_in, tau_out, tau_in * tau_out] with no intercept, so
// every goodness-of-fit figure is uncentered: R^2 = 1 - RSS / sum(y^2) and the
// F test compares sum(yhat^2) / 3 against RSS / (n - 3).
struct FitResult {
  TokenCoeffs coeffs{};
  TokenCoeffs std_errors{};
  double r_squared = 0.0;
  double f_statistic = 0.0;
  double p_value = 1.0;
  double rss = 0.0;
  double sum_sq_response = 0.0;
  std::size_t n_obs = 0;
};

// Throws Error(kInvalidArgument) for fewer than 4 rows and Error(kNumeric)
// when the design matrix is rank deficient.
FitResult ols_fit_no_intercept(std::span<const RegressionRow> rows);

// ---------------------------------------------------------------------------
// Balanced two-way fixed-effects ANOVA with interaction
// ---------------------------------------------------------------------------

// cells[i][j] holds the replicate responses at level i of factor A (input
// tokens) and level j of factor B (output tokens).
class BalancedGrid {
 public:
  // Throws unless there are >= 2 levels per factor and every cell holds the
  // same number r >= 1 of replicates.
  explicit BalancedGrid(std::vector<std::vector<std::vector<double>>> cells);

  // Groups rows by (tau_in, tau_out); levels are the distinct values in
  // ascending order. Every level pair must be present with equal replicates.
  static BalancedGrid from_rows(std::span<const RegressionRow> rows);

  std::size_t levels_a() const noexcept { return cells_.size(); }
  std::size_t levels_b() const noexcept { return cells_.front().size(); }
  std::size_t replicates() const noexcept { return cells_.front().front().size(); }
  const std::vector<double>& cell(std::size_t i, std::size_t j) const {
    return cells_[i][j];
  }

 private:
  std::vector<std::vector<std::vector<double>>> cells_;
};

struct AnovaRow {
  double sum_squares = 0.0;
  std::size_t dof = 0;
  // Absent on the error row.
  std::optional<double> f_statistic;
  std::optional<double> p_value;
};

struct AnovaTable {
  AnovaRow factor_a;     // input tokens
  AnovaRow factor_b;     // output tokens
  AnovaRow interaction;
  AnovaRow error;
  double total_sum_squares = 0.0;
  std::size_t total_dof = 0;
};

// Requires r >= 2 (the interaction model leaves no error dof otherwise).
// When the error mean square is zero, F is +inf with p = 0 for a factor with
// positive sum of squares, and F = 0 with p = 1 for one without.
AnovaTable two_way_anova(const BalancedGrid& grid);

}  // namespace ecoroute::stats
