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


#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "posebench/error.hpp"
#include "posebench/special_functions.hpp"
#include "posebench/stats.hpp"

using namespace posebench;
namespace sp = posebench::special;

TEST_CASE("incomplete beta examples and domain") {
  CHECK(sp::regularized_incomplete_beta(2, 3, 0) == 0.0);
  CHECK(sp::regularized_incomplete_beta(2, 3, 1) == 1.0);
  CHECK(sp::regularized_incomplete_beta(0.5, 0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sp::regularized_incomplete_beta(2, 3, 0.25) == doctest::Approx(0.26171875).epsilon(1e-12));
  CHECK_THROWS_AS(sp::regularized_incomplete_beta(0, 3, 0.5), DomainError);
  CHECK_THROWS_AS(sp::regularized_incomplete_beta(2, -1, 0.5), DomainError);
  CHECK_THROWS_AS(sp::regularized_incomplete_beta(2, 3, 1.5), DomainError);
}

TEST_CASE("incomplete gamma examples and domain") {
  CHECK(sp::regularized_gamma_upper(2.5, 0) == 1.0);
  CHECK(sp::regularized_gamma_upper(0.5, 1.9208) == doctest::Approx(0.0500).epsilon(1e-3));
  for (double x : {0.1, 1.0, 3.0, 12.0}) {
    CHECK(sp::regularized_gamma_upper(1, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
    CHECK(sp::regularized_gamma_upper(0.5, x) == doctest::Approx(std::erfc(std::sqrt(x))).epsilon(1e-10));
    CHECK(sp::regularized_gamma_lower(3, x) + sp::regularized_gamma_upper(3, x) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(sp::regularized_gamma_upper(0, 1), DomainError);
  CHECK_THROWS_AS(sp::regularized_gamma_upper(1, -1), DomainError);
}

TEST_CASE("special functions agree with Boost and quadrature on a 100-point grid") {
  boost::math::quadrature::tanh_sinh<double> integrator;
  testing::Gaussian g(11);
  for (int i = 0; i < 100; ++i) {
    const double a = 0.5 + 9.5 * g.uniform();
    const double b = 0.5 + 9.5 * g.uniform();
    const double x = 0.01 + 0.98 * g.uniform();
    const double ours = sp::regularized_incomplete_beta(a, b, x);
    CHECK(std::fabs(ours - boost::math::ibeta(a, b, x)) < 1e-8);
    const double integral = integrator.integrate(
        [&](double t) { return std::pow(t, a - 1) * std::pow(1 - t, b - 1); }, 0.0, x);
    CHECK(std::fabs(ours - integral / boost::math::beta(a, b)) < 1e-8);

    const double s = 0.5 + 9.5 * g.uniform();
    const double y = 30.0 * g.uniform();
    const double q = sp::regularized_gamma_upper(s, y);
    CHECK(std::fabs(q - boost::math::gamma_q(s, y)) < 1e-8);
    const double lower = integrator.integrate(
        [&](double t) { return std::exp((s - 1) * std::log(t) - t - std::lgamma(s)); }, 0.0, y);
    CHECK(std::fabs((1.0 - q) - lower) < 1e-8);
  }
}

TEST_CASE("student t and chi-squared distribution helpers") {
  CHECK(sp::student_t_cdf(0, 5) == doctest::Approx(0.5));
  CHECK(sp::student_t_quantile(0.975, 4) == doctest::Approx(2.776445).epsilon(1e-6));
  CHECK(sp::student_t_quantile(0.975, 1) == doctest::Approx(12.7062).epsilon(1e-5));
  CHECK(sp::student_t_two_tailed_p(sp::student_t_quantile(0.975, 9), 9) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(sp::chi_squared_sf(3.841459, 1) == doctest::Approx(0.05).epsilon(1e-5));
  CHECK(sp::chi_squared_sf(0, 1) == 1.0);
}

TEST_CASE("paired t-test worked example") {
  const std::vector<double> a = {2, 4, 6, 8, 10};
  const std::vector<double> b = {1, 2, 3, 4, 5};
  const auto r = paired_t_test(a, b);
  CHECK(r.test == "paired_t_test");
  CHECK(r.statistic == doctest::Approx(4.2426).epsilon(1e-4));
  CHECK(r.df == 4);
  CHECK(r.p == doctest::Approx(0.0132).epsilon(1e-3));
  CHECK(r.n == 5);

  const auto swapped = paired_t_test(b, a);
  CHECK(swapped.statistic == doctest::Approx(-r.statistic));
  CHECK(swapped.p == doctest::Approx(r.p));

  const auto same = paired_t_test(a, a);
  CHECK(same.statistic == 0.0);
  CHECK(same.p == 1.0);
}

TEST_CASE("paired t-test edge cases") {
  CHECK_THROWS_AS(paired_t_test(std::vector<double>{1}, std::vector<double>{2}), DomainError);
  CHECK_THROWS_AS(paired_t_test(std::vector<double>{1, 2}, std::vector<double>{2}), DomainError);
  // Constant nonzero difference: infinitely significant.
  const auto r = paired_t_test(std::vector<double>{2, 3, 4}, std::vector<double>{1, 2, 3});
  CHECK(std::isinf(r.statistic));
  CHECK(r.statistic > 0);
  CHECK(r.p == 0.0);
  CHECK(paired_t_test(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 3}, 4).excluded_pairs == 4);
}

TEST_CASE("paired t-test invariances and oracle agreement") {
  testing::Gaussian g(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(g.uniform() * 20);
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = 5 + 2 * g.normal();
      b[i] = a[i] + 0.5 * g.normal() + 0.3;
    }
    const auto r = paired_t_test(a, b);
    double t_ref = 0.0;
    const double p_ref = oracle::paired_t_p(a, b, &t_ref);
    CHECK(std::fabs(r.p - p_ref) < 1e-8);
    CHECK(r.statistic == doctest::Approx(t_ref).epsilon(1e-10));
    CHECK(r.p >= 0.0);
    CHECK(r.p <= 1.0);

    std::vector<double> a2(n), b2(n);
    for (std::size_t i = 0; i < n; ++i) {
      a2[i] = 3.5 * a[i] + 100;
      b2[i] = 3.5 * b[i] + 100;
    }
    const auto r2 = paired_t_test(a2, b2);
    CHECK(r2.statistic == doctest::Approx(r.statistic).epsilon(1e-9));
    CHECK(r2.p == doctest::Approx(r.p).epsilon(1e-9));
  }
}

TEST_CASE("p-values are monotone in the statistic") {
  double prev = 1.0;
  for (double t = 0.0; t < 20.0; t += 0.25) {
    const double p = sp::student_t_two_tailed_p(t, 7);
    CHECK(p <= prev);
    prev = p;
  }
  prev = 1.0;
  for (double x = 0.0; x < 60.0; x += 0.5) {
    const double p = sp::chi_squared_sf(x, 1);
    CHECK(p <= prev);
    prev = p;
  }
}

TEST_CASE("chi-squared worked examples") {
  auto r = chi_squared_2x2({20, 10, 10, 20});
  CHECK(r.test == "pearson_chi_squared");
  CHECK(r.statistic == doctest::Approx(6.6667).epsilon(1e-4));
  CHECK(r.p == doctest::Approx(0.00982).epsilon(1e-3));
  CHECK(r.df == 1);
  CHECK(r.n == 60);

  r = chi_squared_2x2({10, 10, 10, 10});
  CHECK(r.statistic == 0.0);
  CHECK(r.p == 1.0);

  for (std::size_t k : {1u, 2u, 7u}) {
    CHECK(chi_squared_2x2({k * 6, k * 9, 6, 9}).statistic == doctest::Approx(0.0));
  }
}

TEST_CASE("chi-squared degenerate tables") {
  CHECK_THROWS_AS(chi_squared_2x2({10, 0, 5, 0}), DomainError);  // no incorrect outcomes
  CHECK_THROWS_AS(chi_squared_2x2({0, 0, 5, 5}), DomainError);   // empty row
}

TEST_CASE("chi-squared invariances and oracle agreement") {
  testing::Gaussian g(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto draw = [&] { return 1 + static_cast<std::size_t>(g.uniform() * 60); };
    const Table2x2 t{draw(), draw(), draw(), draw()};
    const auto r = chi_squared_2x2(t);
    double stat = 0.0;
    const double p_ref = oracle::chi_squared_p(t.a_correct, t.a_incorrect, t.b_correct, t.b_incorrect, &stat);
    CHECK(std::fabs(r.p - p_ref) < 1e-8);
    CHECK(r.statistic == doctest::Approx(stat).epsilon(1e-10));
    const auto rows = chi_squared_2x2({t.b_correct, t.b_incorrect, t.a_correct, t.a_incorrect});
    const auto cols = chi_squared_2x2({t.a_incorrect, t.a_correct, t.b_incorrect, t.b_correct});
    CHECK(rows.statistic == doctest::Approx(r.statistic).epsilon(1e-12));
    CHECK(cols.statistic == doctest::Approx(r.statistic).epsilon(1e-12));
  }
}

TEST_CASE("mcnemar") {
  const auto r = mcnemar(15, 5);
  CHECK(r.test == "mcnemar");
  CHECK(r.statistic == doctest::Approx(5.0));
  CHECK(r.p == doctest::Approx(0.025347).epsilon(1e-4));
  CHECK_THROWS_AS(mcnemar(0, 0), DomainError);
}

TEST_CASE("test result JSON") {
  const auto j = nlohmann::json::parse(to_json(paired_t_test(std::vector<double>{2, 4, 6, 8, 10},
                                                              std::vector<double>{1, 2, 3, 4, 5}, 2)));
  CHECK(j.at("test") == "paired_t_test");
  CHECK(j.at("df") == 4);
  CHECK(j.at("n") == 5);
  CHECK(j.at("excluded_pairs") == 2);
  CHECK(j.at("p").get<double>() == doctest::Approx(0.0132356).epsilon(1e-5));
  // Infinite statistics survive as strings rather than invalid JSON.
  const auto inf = to_json(paired_t_test(std::vector<double>{2, 3, 4}, std::vector<double>{1, 2, 3}));
  CHECK(nlohmann::json::parse(inf).at("statistic") == "inf");
}
