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

// Minimal self-contained SVG plots. Output is a pure function of the input
// (fixed-precision coordinates, no timestamps) so reruns are byte-identical.

#pragma once

#include <span>
#include <string>

#include "posebench/metrics.hpp"
#include "posebench/reliability.hpp"

namespace posebench {

/// Mean error per merged group with 95% CI whiskers, one bar per table
/// (e.g. per view) in each group.
std::string group_bar_chart_svg(std::span<const StatsTable> tables, const std::string& title);

/// Mean error against missing ratio. One color per model; line style by
/// view: top solid, diagonal dashed, anything else dotted ("all" is solid).
std::string reliability_plot_svg(std::span<const ReliabilityCurve> curves, const std::string& title);

/// Stroke dash pattern used for a view label; empty for solid.
std::string dash_pattern_for_view(const std::string& view);

}  // namespace posebench
