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

// Report serialization. CSV and JSON carry full precision (shortest
// round-trip decimal form) and the same values; absent values are an empty
// CSV field and JSON null. Only the human-readable text table rounds, to two
// decimals.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posebench/metrics.hpp"
#include "posebench/occlusion.hpp"
#include "posebench/reliability.hpp"
#include "posebench/stats.hpp"

namespace posebench {

/// Shortest decimal string that parses back to `v`.
std::string format_number(double v);
std::string format_optional(const std::optional<double>& v);

/// Per-group rows of one or more tables (typically overall plus each view):
/// group, view, n, mean_px, ci95_px, mean_mm_upper_bound, pck_<ratio>...,
/// annotated, unpredicted, pck_excluded.
std::string group_stats_csv(std::span<const StatsTable> tables);
std::string group_stats_json(std::span<const StatsTable> tables);

/// One row per (model, view) from each table's "all" row.
std::string pck_summary_csv(std::span<const StatsTable> tables);
std::string pck_summary_json(std::span<const StatsTable> tables);
/// Fixed-width text table; PCK in percent and errors in pixels, 2 decimals.
std::string pck_summary_text(std::span<const StatsTable> tables);

/// t, m, mean_px, retained_n
std::string curve_csv(const ReliabilityCurve& curve);
std::string curve_json(const ReliabilityCurve& curve);

std::string occlusion_json(const OcclusionStats& stats);
std::string occlusion_text(const OcclusionStats& stats);

struct AgreementOutput {
  std::vector<StatsTable> tables;
  std::size_t double_annotated_frames = 0;
  std::optional<double> missing_ratio;
};
std::string agreement_json(const AgreementOutput& out);

/// Outcome-frequency tests at one PCK ratio. A degenerate table leaves the
/// result empty and explains why in the matching error string.
struct RatioComparison {
  PckContingency counts;
  std::optional<TestResult> chi_squared;
  std::string chi_squared_error;
  std::optional<TestResult> mcnemar;  ///< only when requested
  std::string mcnemar_error;
};

struct ComparisonOutput {
  std::string model_a;
  std::string model_b;
  std::string view;
  TestResult t_test;
  std::vector<RatioComparison> ratios;
};
std::string comparison_json(const ComparisonOutput& out);
/// One row per test: test, ratio, statistic, df, p, n, excluded_pairs.
std::string comparison_csv(const ComparisonOutput& out);

}  // namespace posebench
