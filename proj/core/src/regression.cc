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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "ecoroute/error.h"
#include "ecoroute/stats.h"

namespace ecoroute::stats {
namespace {

using Vec3 = std::array<long double, 3>;
using Mat3 = std::array<Vec3, 3>;

Vec3 regressors(const RegressionRow& r) {
  const long double a = r.tau_in;
  const long double b = r.tau_out;
  return {a, b, a * b};
}

// Lower Cholesky factor of a symmetric positive-definite matrix whose
// diagonal has been equilibrated to O(1). Returns false on a pivot that is
// not clearly positive, which signals collinear regressors.
bool cholesky(const Mat3& g, Mat3& l) {
  constexpr long double kPivotFloor = 1e-12L;
  l = {};
  for (int j = 0; j < 3; ++j) {
    long double diag = g[j][j];
    for (int k = 0; k < j; ++k) diag -= l[j][k] * l[j][k];
    if (!(diag > kPivotFloor * g[j][j])) return false;
    l[j][j] = std::sqrt(diag);
    for (int i = j + 1; i < 3; ++i) {
      long double v = g[i][j];
      for (int k = 0; k < j; ++k) v -= l[i][k] * l[j][k];
      l[i][j] = v / l[j][j];
    }
  }
  return true;
}

Vec3 cholesky_solve(const Mat3& l, Vec3 b) {
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < i; ++k) b[i] -= l[i][k] * b[k];
    b[i] /= l[i][i];
  }
  for (int i = 2; i >= 0; --i) {
    for (int k = i + 1; k < 3; ++k) b[i] -= l[k][i] * b[k];
    b[i] /= l[i][i];
  }
  return b;
}

}  // namespace

FitResult ols_fit_no_intercept(std::span<const RegressionRow> rows) {
  const std::size_t n = rows.size();
  if (n <= 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "OLS needs at least 4 observations for 3 regressors, got " +
                    std::to_string(n));
  }
  for (const auto& r : rows) {
    if (!std::isfinite(r.tau_in) || !std::isfinite(r.tau_out) ||
        !std::isfinite(r.response)) {
      throw Error(ErrorKind::kInvalidArgument, "OLS input contains non-finite values");
    }
  }

  // Column scales: root-mean-square of each regressor.
  Vec3 scale{};
  for (const auto& r : rows) {
    const auto x = regressors(r);
    for (int j = 0; j < 3; ++j) scale[j] += x[j] * x[j];
  }
  for (int j = 0; j < 3; ++j) {
    if (!(scale[j] > 0)) {
      throw Error(ErrorKind::kNumeric,
                  "design matrix is singular: regressor " + std::to_string(j) +
                      " is identically zero");
    }
    scale[j] = std::sqrt(scale[j] / n);
  }

  Mat3 gram{};
  Vec3 moment{};
  long double sum_sq_y = 0.0L;
  for (const auto& r : rows) {
    auto x = regressors(r);
    for (int j = 0; j < 3; ++j) x[j] /= scale[j];
    const long double y = r.response;
    for (int i = 0; i < 3; ++i) {
      moment[i] += x[i] * y;
      for (int j = 0; j <= i; ++j) gram[i][j] += x[i] * x[j];
    }
    sum_sq_y += y * y;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) gram[i][j] = gram[j][i];
  }

  Mat3 chol;
  if (!cholesky(gram, chol)) {
    throw Error(ErrorKind::kNumeric,
                "design matrix [tau_in, tau_out, tau_in*tau_out] is rank deficient");
  }
  const Vec3 scaled_coeffs = cholesky_solve(chol, moment);

  FitResult fit;
  fit.n_obs = n;
  Vec3 coeffs{};
  for (int j = 0; j < 3; ++j) {
    coeffs[j] = scaled_coeffs[j] / scale[j];
    fit.coeffs[j] = static_cast<double>(coeffs[j]);
  }

  long double rss = 0.0L;
  for (const auto& r : rows) {
    const auto x = regressors(r);
    const long double fitted = coeffs[0] * x[0] + coeffs[1] * x[1] + coeffs[2] * x[2];
    const long double resid = r.response - fitted;
    rss += resid * resid;
  }
  fit.rss = static_cast<double>(rss);
  fit.sum_sq_response = static_cast<double>(sum_sq_y);

  const double dof_resid = static_cast<double>(n - 3);
  const double sigma2 = fit.rss / dof_resid;
  for (int j = 0; j < 3; ++j) {
    Vec3 unit{};
    unit[j] = 1.0L;
    const auto column = cholesky_solve(chol, unit);
    const long double var = column[j] / (scale[j] * scale[j]) * sigma2;
    fit.std_errors[j] = std::sqrt(static_cast<double>(std::max(var, 0.0L)));
  }

  if (sum_sq_y == 0.0L) {
    fit.r_squared = 0.0;
    fit.f_statistic = 0.0;
    fit.p_value = 1.0;
    return fit;
  }
  fit.r_squared = std::clamp(static_cast<double>(1.0L - rss / sum_sq_y), 0.0, 1.0);
  const long double explained = std::max(sum_sq_y - rss, 0.0L);
  if (rss == 0.0L) {
    fit.f_statistic = std::numeric_limits<double>::infinity();
    fit.p_value = 0.0;
  } else {
    fit.f_statistic = static_cast<double>((explained / 3.0L) / (rss / dof_resid));
    fit.p_value = f_sf(fit.f_statistic, 3.0, dof_resid);
  }
  return fit;
}

BalancedGrid::BalancedGrid(std::vector<std::vector<std::vector<double>>> cells)
    : cells_(std::move(cells)) {
  if (cells_.size() < 2 || cells_.front().size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "ANOVA needs at least 2 levels of each factor");
  }
  const std::size_t b = cells_.front().size();
  const std::size_t r = cells_.front().front().size();
  if (r == 0) {
    throw Error(ErrorKind::kInvalidArgument, "ANOVA cell without observations");
  }
  for (const auto& row : cells_) {
    if (row.size() != b) {
      throw Error(ErrorKind::kInvalidArgument, "ANOVA grid rows differ in length");
    }
    for (const auto& cell : row) {
      if (cell.size() != r) {
        throw Error(ErrorKind::kInvalidArgument,
                    "unbalanced design: cells hold " + std::to_string(r) +
                        " and " + std::to_string(cell.size()) + " replicates");
      }
      for (double v : cell) {
        if (!std::isfinite(v)) {
          throw Error(ErrorKind::kInvalidArgument, "ANOVA response is not finite");
        }
      }
    }
  }
}

BalancedGrid BalancedGrid::from_rows(std::span<const RegressionRow> rows) {
  std::map<double, std::size_t> a_index;
  std::map<double, std::size_t> b_index;
  for (const auto& r : rows) {
    a_index.emplace(r.tau_in, 0);
    b_index.emplace(r.tau_out, 0);
  }
  std::size_t next = 0;
  for (auto& [level, idx] : a_index) idx = next++;
  next = 0;
  for (auto& [level, idx] : b_index) idx = next++;

  std::vector<std::vector<std::vector<double>>> cells(
      a_index.size(), std::vector<std::vector<double>>(b_index.size()));
  for (const auto& r : rows) {
    cells[a_index.at(r.tau_in)][b_index.at(r.tau_out)].push_back(r.response);
  }
  for (const auto& [a, i] : a_index) {
    for (const auto& [b, j] : b_index) {
      if (cells[i][j].empty()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "unbalanced design: no observations at (" +
                        std::to_string(static_cast<long long>(a)) + ", " +
                        std::to_string(static_cast<long long>(b)) + ")");
      }
    }
  }
  return BalancedGrid(std::move(cells));
}

namespace {

AnovaRow factor_row(long double ss, std::size_t dof, long double ms_error,
                    std::size_t dof_error) {
  AnovaRow row;
  row.sum_squares = static_cast<double>(ss);
  row.dof = dof;
  const long double ms = ss / dof;
  if (ms_error > 0.0L) {
    row.f_statistic = static_cast<double>(ms / ms_error);
    row.p_value = f_sf(*row.f_statistic, static_cast<double>(dof),
                       static_cast<double>(dof_error));
  } else if (ms > 0.0L) {
    row.f_statistic = std::numeric_limits<double>::infinity();
    row.p_value = 0.0;
  } else {
    row.f_statistic = 0.0;
    row.p_value = 1.0;
  }
  return row;
}

}  // namespace

AnovaTable two_way_anova(const BalancedGrid& grid) {
  const std::size_t a = grid.levels_a();
  const std::size_t b = grid.levels_b();
  const std::size_t r = grid.replicates();
  if (r < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "no error dof: the interaction model needs at least 2 replicates per cell");
  }

  std::vector<long double> cell_mean(a * b, 0.0L);
  std::vector<long double> mean_a(a, 0.0L);
  std::vector<long double> mean_b(b, 0.0L);
  long double grand = 0.0L;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      long double s = 0.0L;
      for (double v : grid.cell(i, j)) s += v;
      cell_mean[i * b + j] = s / r;
      mean_a[i] += s;
      mean_b[j] += s;
      grand += s;
    }
  }
  for (auto& m : mean_a) m /= static_cast<long double>(b * r);
  for (auto& m : mean_b) m /= static_cast<long double>(a * r);
  grand /= static_cast<long double>(a * b * r);

  long double ss_a = 0.0L;
  long double ss_b = 0.0L;
  long double ss_ab = 0.0L;
  long double ss_err = 0.0L;
  long double ss_total = 0.0L;
  for (std::size_t i = 0; i < a; ++i) ss_a += (mean_a[i] - grand) * (mean_a[i] - grand);
  for (std::size_t j = 0; j < b; ++j) ss_b += (mean_b[j] - grand) * (mean_b[j] - grand);
  ss_a *= static_cast<long double>(b * r);
  ss_b *= static_cast<long double>(a * r);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      const long double m = cell_mean[i * b + j];
      const long double dev = m - mean_a[i] - mean_b[j] + grand;
      ss_ab += dev * dev;
      for (double v : grid.cell(i, j)) {
        ss_err += (v - m) * (v - m);
        ss_total += (v - grand) * (v - grand);
      }
    }
  }
  ss_ab *= static_cast<long double>(r);

  const std::size_t dof_a = a - 1;
  const std::size_t dof_b = b - 1;
  const std::size_t dof_ab = dof_a * dof_b;
  const std::size_t dof_err = a * b * (r - 1);
  const long double ms_err = ss_err / dof_err;

  AnovaTable table;
  table.factor_a = factor_row(ss_a, dof_a, ms_err, dof_err);
  table.factor_b = factor_row(ss_b, dof_b, ms_err, dof_err);
  table.interaction = factor_row(ss_ab, dof_ab, ms_err, dof_err);
  table.error.sum_squares = static_cast<double>(ss_err);
  table.error.dof = dof_err;
  table.total_sum_squares = static_cast<double>(ss_total);
  table.total_dof = a * b * r - 1;
  return table;
}

}  // namespace ecoroute::stats
