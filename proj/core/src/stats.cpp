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

#include "posebench/stats.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "json.hpp"
#include "posebench/error.hpp"
#include "posebench/special_functions.hpp"
#include "posebench/summation.hpp"

namespace posebench {

TestResult paired_t_test(std::span<const double> a, std::span<const double> b,
                         std::size_t excluded_pairs) {
  if (a.size() != b.size()) throw DomainError("paired t-test: samples differ in length");
  if (a.size() < 2) {
    throw DomainError("paired t-test: need at least 2 matched pairs, got " +
                      std::to_string(a.size()));
  }
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];

  const double n = static_cast<double>(diff.size());
  const double mean = *compensated_mean(diff);
  const double sd = *sample_stddev(diff);

  TestResult r;
  r.test = "paired_t_test";
  r.df = n - 1.0;
  r.n = diff.size();
  r.excluded_pairs = excluded_pairs;
  if (sd == 0.0) {
    if (mean == 0.0) {
      r.statistic = 0.0;
      r.p = 1.0;
    } else {
      r.statistic = std::copysign(std::numeric_limits<double>::infinity(), mean);
      r.p = 0.0;
    }
    return r;
  }
  r.statistic = mean / (sd / std::sqrt(n));
  r.p = special::student_t_two_tailed_p(r.statistic, r.df);
  return r;
}

TestResult chi_squared_2x2(const Table2x2& t) {
  const double cells[2][2] = {
      {static_cast<double>(t.a_correct), static_cast<double>(t.a_incorrect)},
      {static_cast<double>(t.b_correct), static_cast<double>(t.b_incorrect)},
  };
  const double rows[2] = {cells[0][0] + cells[0][1], cells[1][0] + cells[1][1]};
  const double cols[2] = {cells[0][0] + cells[1][0], cells[0][1] + cells[1][1]};
  const double total = rows[0] + rows[1];

  double chi2 = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double expected = rows[i] * cols[j] / (total > 0.0 ? total : 1.0);
      if (!(expected > 0.0)) {
        throw DomainError("chi-squared: degenerate table (an expected cell count is zero)");
      }
      const double d = cells[i][j] - expected;
      chi2 += d * d / expected;
    }
  }
  TestResult r;
  r.test = "pearson_chi_squared";
  r.statistic = chi2;
  r.df = 1.0;
  r.p = special::chi_squared_sf(chi2, 1.0);
  r.n = static_cast<std::size_t>(total);
  return r;
}

TestResult mcnemar(std::size_t only_a_correct, std::size_t only_b_correct) {
  const double b = static_cast<double>(only_a_correct);
  const double c = static_cast<double>(only_b_correct);
  if (b + c == 0.0) throw DomainError("McNemar: no discordant pairs");
  TestResult r;
  r.test = "mcnemar";
  r.statistic = (b - c) * (b - c) / (b + c);
  r.df = 1.0;
  r.p = special::chi_squared_sf(r.statistic, 1.0);
  r.n = only_a_correct + only_b_correct;
  return r;
}

std::string to_json(const TestResult& result, int indent) {
  nlohmann::ordered_json j;
  j["test"] = result.test;
  if (std::isfinite(result.statistic)) {
    j["statistic"] = result.statistic;
  } else {
    j["statistic"] = result.statistic > 0 ? "inf" : "-inf";
  }
  j["df"] = result.df;
  j["p"] = result.p;
  j["n"] = result.n;
  j["excluded_pairs"] = result.excluded_pairs;
  return j.dump(indent);
}

}  // namespace posebench
