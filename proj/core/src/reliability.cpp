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

#include "posebench/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "posebench/error.hpp"
#include "posebench/metrics.hpp"

namespace posebench {
namespace {

std::vector<ErrorSample> checked_samples(const Dataset& dataset, const PredictionSet& predictions,
                                         const FrameFilter& filter) {
  auto samples = collect_samples(dataset, predictions, filter);
  if (samples.empty()) throw DomainError("no annotated keypoints in the selection (N = 0)");
  for (const auto& s : samples) {
    if (s.error && !s.confidence) {
      throw DomainError("prediction set '" + predictions.model() +
                        "' has no confidence values; use 'eval' instead of threshold analysis");
    }
  }
  return samples;
}

bool retained(const ErrorSample& s, double threshold) {
  return s.error && !(*s.confidence < threshold);
}

}  // namespace

MissingRatio missing_ratio(const Dataset& dataset, const PredictionSet& predictions,
                           double threshold, const FrameFilter& filter) {
  if (!(threshold >= 0.0)) throw DomainError("threshold must be >= 0");
  const auto samples = checked_samples(dataset, predictions, filter);
  MissingRatio m;
  m.annotated = samples.size();
  for (const auto& s : samples) {
    if (!retained(s, threshold)) ++m.missing;
  }
  return m;
}

ReliabilityCurve threshold_curve(const Dataset& dataset, const PredictionSet& predictions,
                                 std::size_t n_points, const FrameFilter& filter) {
  if (n_points < 2) throw DomainError("threshold curve needs at least 2 points");
  const auto samples = checked_samples(dataset, predictions, filter);

  std::vector<double> confidences;
  for (const auto& s : samples) {
    if (s.error) confidences.push_back(*s.confidence);
  }
  std::sort(confidences.begin(), confidences.end());

  std::vector<double> thresholds = confidences;
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  if (thresholds.size() > n_points) {
    thresholds.clear();
    const std::size_t last = confidences.size() - 1;
    for (std::size_t i = 0; i < n_points; ++i) {
      // Nearest-rank quantile; integer arithmetic keeps the grid exact.
      const std::size_t rank = (i * last + (n_points - 1) / 2) / (n_points - 1);
      thresholds.push_back(confidences[rank]);
    }
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  }
  if (thresholds.empty()) {
    thresholds.push_back(0.0);
  } else {
    thresholds.push_back(std::nextafter(thresholds.back(), std::numeric_limits<double>::infinity()));
  }

  ReliabilityCurve curve;
  curve.model = predictions.model();
  curve.view = filter.view_label();
  curve.annotated = samples.size();
  std::vector<ErrorSample> kept;
  kept.reserve(samples.size());
  for (double t : thresholds) {
    kept.clear();
    for (const auto& s : samples) {
      if (retained(s, t)) kept.push_back(s);
    }
    CurvePoint p;
    p.threshold = t;
    p.retained = kept.size();
    p.missing_ratio =
        static_cast<double>(samples.size() - kept.size()) / static_cast<double>(samples.size());
    p.mean_px = mean_error(kept);
    curve.points.push_back(p);
    if (kept.empty()) break;
  }
  return curve;
}

}  // namespace posebench
