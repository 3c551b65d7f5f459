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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posebench/schema.hpp"

namespace posebench {

/// Sub-pixel image position.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Camera perspective. `top` and `diagonal` are the two standard views; any
/// other label is carried verbatim.
class View {
 public:
  enum class Kind { kTop, kDiagonal, kOther };

  View() = default;
  static View parse(std::string_view label);
  static View top() { return View(Kind::kTop, "top"); }
  static View diagonal() { return View(Kind::kDiagonal, "diagonal"); }

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  friend bool operator==(const View&, const View&) = default;

 private:
  View(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_ = Kind::kTop;
  std::string label_ = "top";
};

struct FrameRecord {
  std::string id;
  std::string subject;
  std::string session;  ///< free label, e.g. "T1"
  View view;
  double age_days = 0.0;  ///< post-term age
  int width = 0;
  int height = 0;

  friend bool operator==(const FrameRecord&, const FrameRecord&) = default;
};

/// One annotator's labels for one frame. An empty slot means "not annotated"
/// (e.g. an occluded ear) and is excluded from every denominator.
struct Annotation {
  std::string annotator;
  std::array<std::optional<Point>, kNumKeypoints> keypoints{};

  std::size_t annotated_count() const;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct KeypointPrediction {
  Point position;
  std::optional<double> confidence;  ///< in [0, 1] when present

  friend bool operator==(const KeypointPrediction&, const KeypointPrediction&) = default;
};

using FramePredictions = std::array<std::optional<KeypointPrediction>, kNumKeypoints>;

/// Frame, its primary annotation and the optional second annotation used
/// for annotator agreement.
struct FrameEntry {
  FrameRecord record;
  Annotation primary;
  std::optional<Annotation> secondary;
};

/// Immutable, validated collection of annotated frames. Frames are kept
/// sorted by id so that loading is independent of file order.
class Dataset {
 public:
  static constexpr double kDefaultMmPerPixelBound = 0.8;

  Dataset() = default;

  /// Throws ValidationError on duplicate ids, non-positive dimensions,
  /// negative ages or a non-positive mm-per-pixel bound.
  explicit Dataset(std::vector<FrameEntry> entries,
                   double mm_per_pixel_bound = kDefaultMmPerPixelBound);

  std::size_t size() const { return frames_.size(); }
  bool empty() const { return frames_.empty(); }

  std::span<const FrameRecord> frames() const { return frames_; }
  const FrameRecord& frame(std::size_t i) const { return frames_[i]; }
  const Annotation& primary(std::size_t i) const { return primary_[i]; }
  const std::optional<Annotation>& secondary(std::size_t i) const { return secondary_[i]; }

  double mm_per_pixel_bound() const { return mm_per_pixel_bound_; }
  std::size_t double_annotated_count() const;

  std::optional<std::size_t> find(std::string_view frame_id) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<FrameRecord> frames_;
  std::vector<Annotation> primary_;
  std::vector<std::optional<Annotation>> secondary_;
  double mm_per_pixel_bound_ = kDefaultMmPerPixelBound;
};

/// One model's estimates, aligned index-by-index with a Dataset's frames.
/// Frames absent from the source file are stored with every slot empty.
class PredictionSet {
 public:
  PredictionSet() = default;

  /// `frames` must have one entry per dataset frame, in dataset order.
  /// Throws ValidationError on a size mismatch or a confidence outside [0, 1].
  PredictionSet(std::string model, const Dataset& dataset, std::vector<FramePredictions> frames);

  /// Every slot "not predicted".
  static PredictionSet empty_for(std::string model, const Dataset& dataset);

  const std::string& model() const { return model_; }
  std::size_t size() const { return frames_.size(); }
  const FramePredictions& frame(std::size_t i) const { return frames_[i]; }

  /// True when every present prediction carries a confidence value.
  bool has_confidence() const;

  friend bool operator==(const PredictionSet&, const PredictionSet&) = default;

 private:
  std::string model_;
  std::vector<FramePredictions> frames_;
};

/// Frame selection predicate. Unset fields match everything; the age range
/// is half-open [min, max).
struct FrameFilter {
  std::optional<std::string> view;
  std::optional<double> min_age_days;
  std::optional<double> max_age_days;
  std::vector<std::string> subjects;

  static FrameFilter all() { return {}; }
  static FrameFilter for_view(std::string label) {
    FrameFilter f;
    f.view = std::move(label);
    return f;
  }

  bool matches(const FrameRecord& frame) const;
  /// "all" or the view label; used as the view column in reports.
  std::string view_label() const { return view.value_or("all"); }
};

/// Distinct view labels present in the dataset, sorted.
std::vector<std::string> view_labels(const Dataset& dataset);

/// Throws DomainError unless `predictions` is aligned with `dataset`.
void require_aligned(const Dataset& dataset, const PredictionSet& predictions);

}  // namespace posebench
