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

#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace posebench {

/// Outcome of a two-tailed significance test.
struct TestResult {
  std::string test;
  double statistic = 0.0;
  double df = 0.0;
  double p = 1.0;
  std::size_t n = 0;               ///< pairs, or table total
  std::size_t excluded_pairs = 0;  ///< slots dropped by pairwise-complete matching
};

/// Paired-sample t-test on d_i = a_i - b_i with n - 1 degrees of freedom.
///
/// Throws DomainError for fewer than two pairs or unequal lengths. When all
/// differences are equal and nonzero the statistic is +-infinity and p is
/// reported as 0, meaning "below what double precision can resolve".
TestResult paired_t_test(std::span<const double> a, std::span<const double> b,
                         std::size_t excluded_pairs = 0);

/// 2x2 table of outcome counts; rows are models, columns correct/incorrect.
struct Table2x2 {
  std::size_t a_correct = 0;
  std::size_t a_incorrect = 0;
  std::size_t b_correct = 0;
  std::size_t b_incorrect = 0;
};

/// Pearson chi-squared without continuity correction, df = 1.
/// Throws DomainError when any expected cell count is zero.
TestResult chi_squared_2x2(const Table2x2& table);

/// McNemar's test on the discordant pair counts (no continuity correction).
/// Not part of the default comparison; offered because correctness outcomes
/// of two models on the same keypoints are paired. Throws DomainError when
/// there are no discordant pairs.
TestResult mcnemar(std::size_t only_a_correct, std::size_t only_b_correct);

/// {"test", "statistic", "df", "p", "n", "excluded_pairs"}; a non-finite
/// statistic is written as the string "inf" or "-inf".
std::string to_json(const TestResult& result, int indent = 2);

}  // namespace posebench
