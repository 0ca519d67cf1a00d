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

#include <cmath>
#include <limits>
#include <string>

#include "ecoroute/error.h"
#include "ecoroute/stats.h"

namespace ecoroute::stats {
namespace {

constexpr double kTolerance = 1e-14;
constexpr int kMaxIterations = 300;
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b) (modified Lentz).
double beta_continued_fraction(double x, double a, double b) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kTolerance) return h;
  }
  throw Error(ErrorKind::kNumeric,
              "incomplete beta continued fraction did not converge");
}

void check_dof(double d, const char* what) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " must be a positive number");
  }
}

}  // namespace

double incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "incomplete beta needs a, b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "incomplete beta needs x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(x, a, b) / a;
  }
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double f_cdf(double x, double d1, double d2) {
  check_dof(d1, "numerator dof");
  check_dof(d2, "denominator dof");
  if (!(x >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "F cdf needs x >= 0");
  }
  if (std::isinf(x)) return 1.0;
  const double num = d1 * x;
  return incomplete_beta(num / (num + d2), d1 / 2.0, d2 / 2.0);
}

double f_sf(double x, double d1, double d2) {
  check_dof(d1, "numerator dof");
  check_dof(d2, "denominator dof");
  if (!(x >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "F survival needs x >= 0");
  }
  if (std::isinf(x)) return 0.0;
  const double num = d1 * x;
  return incomplete_beta(d2 / (d2 + num), d2 / 2.0, d1 / 2.0);
}

double t_cdf(double t, double dof) {
  check_dof(dof, "t dof");
  if (std::isnan(t)) {
    throw Error(ErrorKind::kInvalidArgument, "t cdf of NaN");
  }
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * incomplete_beta(dof / (dof + t * t), dof / 2.0, 0.5);
  return t > 0 ? 1.0 - tail : tail;
}

double t_quantile(double p, double dof) {
  check_dof(dof, "t dof");
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "t quantile needs p in (0, 1)");
  }
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -t_quantile(1.0 - p, dof);

  // Solve P(T > t) = 1 - p on the upper tail, where the tail is evaluated
  // directly and keeps full relative precision for large t.
  const double target = 1.0 - p;
  auto upper_tail = [dof](double t) {
    return 0.5 * incomplete_beta(dof / (dof + t * t), dof / 2.0, 0.5);
  };
  double lo = 0.0;
  double hi = 1.0;
  while (upper_tail(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) {
      throw Error(ErrorKind::kNumeric, "t quantile bracket overflow");
    }
  }
  for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (upper_tail(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ecoroute::stats
