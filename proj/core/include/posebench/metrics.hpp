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

// Keypoint error, torso-normalized PCK and per-group aggregation.
//
// Conventions shared by every function here:
//  * Only annotated slots are evaluated. Unannotated slots (occlusions) are
//    outside every denominator.
//  * An annotated slot without a prediction has no error. It is excluded
//    from mean error and counts as incorrect for PCK.
//  * A keypoint is correct at ratio r iff error <= r * torso (inclusive).
//  * Torso length comes from the frame's reference annotation. Frames without
//    a torso are left out of PCK and reported as excluded.
//  * Frames are visited in dataset order (sorted by id) and keypoints in
//    schema order; sums are compensated. Results are therefore independent
//    of file order and bit-identical across runs.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posebench/dataset.hpp"

namespace posebench {

/// Euclidean pixel distance.
double point_error(const Point& predicted, const Point& annotated);

/// Left shoulder to left hip; right side when the left pair is incomplete;
/// nullopt when neither pair is complete.
std::optional<double> torso_length(const Annotation& annotation);

double px_to_mm_upper_bound(double px, double mm_per_px = Dataset::kDefaultMmPerPixelBound);

/// One annotated keypoint slot.
struct ErrorSample {
  std::size_t frame = 0;  ///< dataset frame index
  std::size_t keypoint = 0;
  Group group = Group::kNose;
  std::optional<double> error;       ///< absent when not predicted
  std::optional<double> torso;       ///< of the frame's reference annotation
  std::optional<double> confidence;  ///< of the prediction, when given
};

/// Error samples for every annotated slot of the frames selected by `filter`.
std::vector<ErrorSample> collect_samples(const Dataset& dataset, const PredictionSet& predictions,
                                         const FrameFilter& filter);

/// Samples for double-annotated frames with the secondary annotation in the
/// role of the prediction (no confidence). Used for annotator agreement.
std::vector<ErrorSample> collect_annotation_samples(const Dataset& dataset,
                                                    const FrameFilter& filter);

class PckRatios {
 public:
  PckRatios();  ///< 0.05, 0.075, 0.1
  /// Throws DomainError unless every ratio is > 0 and the list is strictly increasing.
  explicit PckRatios(std::vector<double> ratios);

  std::span<const double> values() const { return ratios_; }
  std::size_t size() const { return ratios_.size(); }
  double operator[](std::size_t i) const { return ratios_[i]; }

  /// Column name, e.g. 0.075 -> "pck_0075".
  static std::string column_name(double ratio);

 private:
  std::vector<double> ratios_;
};

struct PckResult {
  std::size_t correct = 0;
  std::size_t total = 0;           ///< annotated slots with a defined torso
  std::size_t excluded_slots = 0;  ///< annotated slots whose frame has no torso
  std::size_t excluded_frames = 0;

  std::optional<double> fraction() const {
    if (total == 0) return std::nullopt;
    return static_cast<double>(correct) / static_cast<double>(total);
  }
};

/// Throws DomainError unless ratio > 0.
PckResult pck(std::span<const ErrorSample> samples, double ratio);

struct MeanCi {
  double mean = 0.0;
  std::optional<double> half_width;  ///< absent for n < 2
};

/// Mean with a Student-t confidence interval: mean +- t_{(1+level)/2, n-1} * s / sqrt(n).
/// Throws DomainError for an empty input or a level outside (0, 1).
MeanCi ci_mean(std::span<const double> values, double level = 0.95);

/// Compensated mean of the errors of predicted samples, in input order.
std::optional<double> mean_error(std::span<const ErrorSample> samples);

/// Statistics for one merged group (or "all") within one view stratum.
struct GroupStats {
  std::string group;
  std::string view;
  std::size_t n = 0;  ///< matched (annotated and predicted) slots
  std::size_t annotated = 0;
  std::size_t unpredicted = 0;
  std::optional<double> mean_px;
  std::optional<double> ci95_px;
  std::optional<double> mean_mm_upper_bound;
  std::vector<std::optional<double>> pck;  ///< one per ratio
  std::size_t pck_total = 0;
  std::size_t pck_excluded = 0;  ///< slots dropped for lack of a torso
};

/// Rows for the nine merged groups in schema order followed by an "all" row.
struct StatsTable {
  std::string model;
  std::string view;
  std::vector<double> ratios;
  std::vector<GroupStats> rows;
  std::size_t frames = 0;
  std::size_t torso_excluded_frames = 0;

  const GroupStats& overall() const { return rows.back(); }
  const GroupStats& row(Group g) const { return rows[index(g)]; }
};

inline constexpr const char* kAllGroups = "all";

StatsTable aggregate_samples(std::span<const ErrorSample> samples, std::string model,
                             std::string view, const PckRatios& ratios, double mm_per_px);

StatsTable aggregate(const Dataset& dataset, const PredictionSet& predictions,
                     const FrameFilter& filter = {}, const PckRatios& ratios = {});

struct AgreementReport {
  StatsTable table;
  std::size_t double_annotated_frames = 0;
  std::size_t labeled_slots = 0;       ///< labeled by at least one annotator
  std::size_t single_labeled_slots = 0;  ///< labeled by exactly one

  std::optional<double> missing_ratio() const {
    if (labeled_slots == 0) return std::nullopt;
    return static_cast<double>(single_labeled_slots) / static_cast<double>(labeled_slots);
  }
};

/// Second annotator scored against the first on double-annotated frames.
/// Throws DomainError when the selection contains no such frame.
AgreementReport annotator_agreement(const Dataset& dataset, const FrameFilter& filter = {},
                                    const PckRatios& ratios = {});

/// Errors of two models on the slots where both predicted, in dataset order.
struct PairedErrors {
  std::vector<double> a;
  std::vector<double> b;
  std::size_t excluded = 0;  ///< annotated slots where at least one model did not predict
};

PairedErrors paired_errors(const Dataset& dataset, const PredictionSet& a, const PredictionSet& b,
                           const FrameFilter& filter = {});

/// PCK correctness counts of two models on the same slots at one ratio.
struct PckContingency {
  double ratio = 0.0;
  std::size_t a_correct = 0;
  std::size_t a_incorrect = 0;
  std::size_t b_correct = 0;
  std::size_t b_incorrect = 0;
  std::size_t only_a_correct = 0;  ///< discordant pairs, for McNemar
  std::size_t only_b_correct = 0;
};

PckContingency pck_contingency(const Dataset& dataset, const PredictionSet& a,
                               const PredictionSet& b, double ratio,
                               const FrameFilter& filter = {});

}  // namespace posebench
