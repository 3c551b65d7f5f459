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

// Confidence thresholding: how much of the annotated keypoint set a model
// drops at threshold t, and what error remains on the points it keeps.
//
// An annotated slot is "missing" at threshold t when the model gave no
// prediction for it or predicted it with confidence c < t (strict). Slots
// without a prediction are therefore missing at every threshold, and a model
// that predicts every slot has m(0) = 0.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "posebench/dataset.hpp"

namespace posebench {

struct MissingRatio {
  std::size_t missing = 0;
  std::size_t annotated = 0;  ///< N

  double value() const { return static_cast<double>(missing) / static_cast<double>(annotated); }
};

/// Throws DomainError when N = 0, when t is negative or NaN, or when a
/// present prediction has no confidence.
MissingRatio missing_ratio(const Dataset& dataset, const PredictionSet& predictions,
                           double threshold, const FrameFilter& filter = {});

struct CurvePoint {
  double threshold = 0.0;
  double missing_ratio = 0.0;
  std::optional<double> mean_px;  ///< absent once every point is filtered out
  std::size_t retained = 0;
};

struct ReliabilityCurve {
  std::string model;
  std::string view;
  std::size_t annotated = 0;
  std::vector<CurvePoint> points;  ///< ascending threshold
};

/// Sweeps every distinct confidence value as threshold, or an `n_points`
/// quantile grid over the confidences when there are more distinct values
/// than that. One final point just above the largest confidence has m = 1
/// and no mean; the curve ends there.
///
/// Throws DomainError when n_points < 2, N = 0 or confidences are missing.
ReliabilityCurve threshold_curve(const Dataset& dataset, const PredictionSet& predictions,
                                 std::size_t n_points, const FrameFilter& filter = {});

}  // namespace posebench
