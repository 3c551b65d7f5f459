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

#include "posebench/dataset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "posebench/error.hpp"

namespace posebench {

View View::parse(std::string_view label) {
  if (label == "top") return top();
  if (label == "diagonal") return diagonal();
  return View(Kind::kOther, std::string(label));
}

std::size_t Annotation::annotated_count() const {
  return static_cast<std::size_t>(
      std::count_if(keypoints.begin(), keypoints.end(), [](const auto& p) { return p.has_value(); }));
}

Dataset::Dataset(std::vector<FrameEntry> entries, double mm_per_pixel_bound)
    : mm_per_pixel_bound_(mm_per_pixel_bound) {
  if (!(mm_per_pixel_bound > 0.0)) {
    throw ValidationError("mm_per_pixel_bound must be > 0");
  }
  std::sort(entries.begin(), entries.end(),
            [](const FrameEntry& a, const FrameEntry& b) { return a.record.id < b.record.id; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const FrameRecord& r = entries[i].record;
    if (i > 0 && entries[i - 1].record.id == r.id) {
      throw ValidationError("duplicate frame id '" + r.id + "'");
    }
    if (r.width <= 0 || r.height <= 0) {
      throw ValidationError("frame '" + r.id + "': width and height must be > 0");
    }
    if (!(r.age_days >= 0.0)) {
      throw ValidationError("frame '" + r.id + "': age_days must be >= 0");
    }
  }
  frames_.reserve(entries.size());
  primary_.reserve(entries.size());
  secondary_.reserve(entries.size());
  for (auto& e : entries) {
    frames_.push_back(std::move(e.record));
    primary_.push_back(std::move(e.primary));
    secondary_.push_back(std::move(e.secondary));
  }
}

std::size_t Dataset::double_annotated_count() const {
  return static_cast<std::size_t>(std::count_if(
      secondary_.begin(), secondary_.end(), [](const auto& a) { return a.has_value(); }));
}

std::optional<std::size_t> Dataset::find(std::string_view frame_id) const {
  auto it = std::lower_bound(frames_.begin(), frames_.end(), frame_id,
                             [](const FrameRecord& f, std::string_view id) { return f.id < id; });
  if (it == frames_.end() || it->id != frame_id) return std::nullopt;
  return static_cast<std::size_t>(it - frames_.begin());
}

PredictionSet::PredictionSet(std::string model, const Dataset& dataset,
                             std::vector<FramePredictions> frames)
    : model_(std::move(model)), frames_(std::move(frames)) {
  if (frames_.size() != dataset.size()) {
    throw ValidationError("prediction set '" + model_ + "' has " + std::to_string(frames_.size()) +
                          " frames, dataset has " + std::to_string(dataset.size()));
  }
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    for (const auto& slot : frames_[i]) {
      if (slot && slot->confidence && !(*slot->confidence >= 0.0 && *slot->confidence <= 1.0)) {
        throw ValidationError("frame '" + dataset.frame(i).id + "': confidence " +
                              std::to_string(*slot->confidence) + " outside [0,1]");
      }
    }
  }
}

PredictionSet PredictionSet::empty_for(std::string model, const Dataset& dataset) {
  return PredictionSet(std::move(model), dataset, std::vector<FramePredictions>(dataset.size()));
}

bool PredictionSet::has_confidence() const {
  for (const auto& f : frames_) {
    for (const auto& slot : f) {
      if (slot && !slot->confidence) return false;
    }
  }
  return true;
}

bool FrameFilter::matches(const FrameRecord& frame) const {
  if (view && frame.view.label() != *view) return false;
  if (min_age_days && frame.age_days < *min_age_days) return false;
  if (max_age_days && !(frame.age_days < *max_age_days)) return false;
  if (!subjects.empty() &&
      std::find(subjects.begin(), subjects.end(), frame.subject) == subjects.end()) {
    return false;
  }
  return true;
}

std::vector<std::string> view_labels(const Dataset& dataset) {
  std::set<std::string> labels;
  for (const auto& f : dataset.frames()) labels.insert(f.view.label());
  return {labels.begin(), labels.end()};
}

void require_aligned(const Dataset& dataset, const PredictionSet& predictions) {
  if (predictions.size() != dataset.size()) {
    throw DomainError("prediction set '" + predictions.model() + "' is not aligned with the dataset");
  }
}

}  // namespace posebench
