// Copyright 2026 The posebench Authors
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

#include "posebench/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "posebench/error.hpp"

namespace posebench::special {
namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

[[noreturn]] void domain(const char* fn, const std::string& what) {
  throw DomainError(std::string(fn) + ": " + what);
}

/// Continued fraction for I_x(a, b) (modified Lentz), valid for
/// x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
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
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  domain("regularized_incomplete_beta", "continued fraction did not converge");
}

/// Series for P(s, x), used for x < s + 1.
double gamma_series(double s, double x) {
  double ap = s;
  double del = 1.0 / s;
  double sum = del;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) {
      return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
  }
  domain("regularized_gamma", "series did not converge");
}

/// Continued fraction for Q(s, x), used for x >= s + 1.
double gamma_continued_fraction(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) {
      return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
    }
  }
  domain("regularized_gamma", "continued fraction did not converge");
}

void check_gamma_args(const char* fn, double s, double x) {
  if (!(s > 0.0) || !std::isfinite(s)) domain(fn, "s must be finite and > 0");
  if (!(x >= 0.0)) domain(fn, "x must be >= 0");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    domain("regularized_incomplete_beta", "a and b must be finite and > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) domain("regularized_incomplete_beta", "x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  // Symmetry I_x(a, b) = 1 - I_{1-x}(b, a) keeps the fraction in its fast region.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double regularized_gamma_lower(double s, double x) {
  check_gamma_args("regularized_gamma_lower", s, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) return gamma_series(s, x);
  return 1.0 - gamma_continued_fraction(s, x);
}

double regularized_gamma_upper(double s, double x) {
  check_gamma_args("regularized_gamma_upper", s, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return 1.0 - gamma_series(s, x);
  return gamma_continued_fraction(s, x);
}

double student_t_two_tailed_p(double t, double df) {
  if (!(df > 0.0)) domain("student_t", "degrees of freedom must be > 0");
  if (std::isnan(t)) domain("student_t", "t is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  return regularized_incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
}

double student_t_cdf(double t, double df) {
  const double tail = 0.5 * student_t_two_tailed_p(t, df);
  return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double probability, double df) {
  if (!(probability > 0.0 && probability < 1.0)) {
    domain("student_t_quantile", "probability must lie in (0, 1)");
  }
  if (!(df > 0.0)) domain("student_t_quantile", "degrees of freedom must be > 0");
  if (probability == 0.5) return 0.0;
  // Solve two-tailed p(t) = target on t > 0, then restore the sign.
  const bool upper = probability > 0.5;
  const double target = upper ? 2.0 * (1.0 - probability) : 2.0 * probability;
  double lo = 0.0;
  double hi = 1.0;
  while (student_t_two_tailed_p(hi, df) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) break;
  }
  for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_two_tailed_p(mid, df) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  return upper ? t : -t;
}

double chi_squared_sf(double x, double df) {
  if (!(df > 0.0)) domain("chi_squared_sf", "degrees of freedom must be > 0");
  if (!(x >= 0.0)) domain("chi_squared_sf", "statistic must be >= 0");
  return regularized_gamma_upper(0.5 * df, 0.5 * x);
}

}  // namespace posebench::special
