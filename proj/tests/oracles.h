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

// Test-only reference computations. Nothing here calls into the library's
// numerical kernels, so they can serve as independent oracles.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace ecoroute::testing {

// Adaptive Gauss-Kronrod (7, 15) quadrature of f over [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-14, int depth = 0) {
  static constexpr std::array<double, 8> kXgk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> kWgk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> kWg = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  if (std::fabs(kronrod - gauss) <= tol || depth > 40) return kronrod;
  return integrate(f, a, center, tol / 2, depth + 1) +
         integrate(f, center, b, tol / 2, depth + 1);
}

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// F(d1, d2) density.
inline double f_density(double x, double d1, double d2) {
  if (x <= 0) return 0.0;
  const double log_pdf = 0.5 * d1 * std::log(d1 / d2) + (0.5 * d1 - 1) * std::log(x) -
                         0.5 * (d1 + d2) * std::log1p(d1 * x / d2) -
                         log_beta(0.5 * d1, 0.5 * d2);
  return std::exp(log_pdf);
}

// F cdf by quadrature. Substituting x = u^2 removes the x^(-1/2) singularity
// of the d1 = 1 density at the origin.
inline double f_cdf_quadrature(double x, double d1, double d2) {
  if (x <= 0) return 0.0;
  auto integrand = [=](double u) { return f_density(u * u, d1, d2) * 2.0 * u; };
  const double root = std::sqrt(x);
  // Split the range so the adaptive rule resolves the mode.
  const int pieces = 16;
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    total += integrate(integrand, root * i / pieces, root * (i + 1) / pieces, 1e-15);
  }
  return total;
}

inline double t_density(double t, double dof) {
  const double log_pdf = -0.5 * std::log(dof) - log_beta(0.5, 0.5 * dof) -
                         0.5 * (dof + 1) * std::log1p(t * t / dof);
  return std::exp(log_pdf);
}

// P(T <= t) for t >= 0 as 1/2 + integral of the density over [0, t].
inline double t_cdf_quadrature(double t, double dof) {
  const int pieces = 64;
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    total += integrate([=](double s) { return t_density(s, dof); }, t * i / pieces,
                       t * (i + 1) / pieces, 1e-15);
  }
  return 0.5 + total;
}

// Upper quantile by bisection on the quadrature cdf.
inline double t_quantile_bisection(double p, double dof) {
  double lo = 0.0;
  double hi = 1.0;
  while (t_cdf_quadrature(hi, dof) < p) hi *= 2;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (t_cdf_quadrature(mid, dof) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Standard normal quantile by bisection on erfc.
inline double normal_quantile(double p) {
  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double cdf = 0.5 * std::erfc(-mid / std::numbers::sqrt2);
    (cdf < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// One-sample Kolmogorov-Smirnov test against Uniform(0, 1). Returns the
// asymptotic p-value of the statistic sqrt(n) * D with the small-sample
// correction of Stephens.
inline double ks_uniform_p_value(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    d = std::max(d, (i + 1) / n - sample[i]);
    d = std::max(d, sample[i] - i / n);
  }
  const double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    p += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace ecoroute::testing
