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

#include "posebench/metrics.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "posebench/error.hpp"
#include "posebench/special_functions.hpp"
#include "posebench/summation.hpp"

namespace posebench {
namespace {

std::optional<double> pair_distance(const Annotation& a, Keypoint from, Keypoint to) {
  const auto& p = a.keypoints[index(from)];
  const auto& q = a.keypoints[index(to)];
  if (!p || !q) return std::nullopt;
  return point_error(*p, *q);
}

bool is_correct(const ErrorSample& s, double ratio) {
  return s.error && *s.error <= ratio * *s.torso;
}

GroupStats summarize(std::span<const ErrorSample> samples, std::string group, std::string view,
                     const PckRatios& ratios, double mm_per_px) {
  GroupStats g;
  g.group = std::move(group);
  g.view = std::move(view);
  g.annotated = samples.size();
  std::vector<double> errors;
  errors.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.error) {
      errors.push_back(*s.error);
    } else {
      ++g.unpredicted;
    }
  }
  g.n = errors.size();
  if (!errors.empty()) {
    const MeanCi ci = ci_mean(errors);
    g.mean_px = ci.mean;
    g.ci95_px = ci.half_width;
    g.mean_mm_upper_bound = px_to_mm_upper_bound(ci.mean, mm_per_px);
  }
  for (double r : ratios.values()) {
    const PckResult res = pck(samples, r);
    g.pck.push_back(res.fraction());
    g.pck_total = res.total;
    g.pck_excluded = res.excluded_slots;
  }
  return g;
}

}  // namespace

double point_error(const Point& predicted, const Point& annotated) {
  return std::hypot(predicted.x - annotated.x, predicted.y - annotated.y);
}

std::optional<double> torso_length(const Annotation& annotation) {
  if (auto left = pair_distance(annotation, Keypoint::kLeftShoulder, Keypoint::kLeftHip)) {
    return left;
  }
  return pair_distance(annotation, Keypoint::kRightShoulder, Keypoint::kRightHip);
}

double px_to_mm_upper_bound(double px, double mm_per_px) {
  if (!(mm_per_px > 0.0)) throw DomainError("mm per pixel must be > 0");
  return px * mm_per_px;
}

std::vector<ErrorSample> collect_samples(const Dataset& dataset, const PredictionSet& predictions,
                                         const FrameFilter& filter) {
  require_aligned(dataset, predictions);
  std::vector<ErrorSample> out;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (!filter.matches(dataset.frame(i))) continue;
    const Annotation& truth = dataset.primary(i);
    const auto torso = torso_length(truth);
    const FramePredictions& pred = predictions.frame(i);
    for (std::size_t k = 0; k < kNumKeypoints; ++k) {
      if (!truth.keypoints[k]) continue;
      ErrorSample s{i, k, KeypointSchema::group_of(k), std::nullopt, torso, std::nullopt};
      if (pred[k]) {
        s.error = point_error(pred[k]->position, *truth.keypoints[k]);
        s.confidence = pred[k]->confidence;
      }
      out.push_back(s);
    }
  }
  return out;
}

std::vector<ErrorSample> collect_annotation_samples(const Dataset& dataset,
                                                    const FrameFilter& filter) {
  std::vector<ErrorSample> out;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& second = dataset.secondary(i);
    if (!second || !filter.matches(dataset.frame(i))) continue;
    const Annotation& truth = dataset.primary(i);
    const auto torso = torso_length(truth);
    for (std::size_t k = 0; k < kNumKeypoints; ++k) {
      if (!truth.keypoints[k]) continue;
      ErrorSample s{i, k, KeypointSchema::group_of(k), std::nullopt, torso, std::nullopt};
      if (second->keypoints[k]) s.error = point_error(*second->keypoints[k], *truth.keypoints[k]);
      out.push_back(s);
    }
  }
  return out;
}

PckRatios::PckRatios() : ratios_{0.05, 0.075, 0.1} {}

PckRatios::PckRatios(std::vector<double> ratios) : ratios_(std::move(ratios)) {
  if (ratios_.empty()) throw DomainError("at least one PCK ratio is required");
  for (std::size_t i = 0; i < ratios_.size(); ++i) {
    if (!(ratios_[i] > 0.0) || !std::isfinite(ratios_[i])) {
      throw DomainError("PCK ratios must be finite and > 0");
    }
    if (i > 0 && !(ratios_[i] > ratios_[i - 1])) {
      throw DomainError("PCK ratios must be strictly increasing");
    }
  }
}

std::string PckRatios::column_name(double ratio) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), ratio);
  std::string digits;
  for (const char* p = buf; p != res.ptr; ++p) {
    if (*p != '.') digits.push_back(*p);
  }
  return "pck_" + digits;
}

PckResult pck(std::span<const ErrorSample> samples, double ratio) {
  if (!(ratio > 0.0)) throw DomainError("PCK ratio must be > 0");
  PckResult r;
  std::set<std::size_t> excluded_frames;
  for (const auto& s : samples) {
    if (!s.torso) {
      ++r.excluded_slots;
      excluded_frames.insert(s.frame);
      continue;
    }
    ++r.total;
    if (is_correct(s, ratio)) ++r.correct;
  }
  r.excluded_frames = excluded_frames.size();
  return r;
}

MeanCi ci_mean(std::span<const double> values, double level) {
  if (values.empty()) throw DomainError("mean of an empty sample");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence level must lie in (0, 1)");
  MeanCi out;
  out.mean = *compensated_mean(values);
  if (auto sd = sample_stddev(values)) {
    const double n = static_cast<double>(values.size());
    const double t = special::student_t_quantile(0.5 * (1.0 + level), n - 1.0);
    out.half_width = t * *sd / std::sqrt(n);
  }
  return out;
}

std::optional<double> mean_error(std::span<const ErrorSample> samples) {
  CompensatedSum sum;
  for (const auto& s : samples) {
    if (s.error) sum.add(*s.error);
  }
  if (sum.count() == 0) return std::nullopt;
  return sum.value() / static_cast<double>(sum.count());
}

StatsTable aggregate_samples(std::span<const ErrorSample> samples, std::string model,
                             std::string view, const PckRatios& ratios, double mm_per_px) {
  StatsTable t;
  t.model = std::move(model);
  t.view = std::move(view);
  t.ratios.assign(ratios.values().begin(), ratios.values().end());

  std::vector<std::vector<ErrorSample>> by_group(kNumGroups);
  std::set<std::size_t> frames;
  std::set<std::size_t> torso_excluded;
  for (const auto& s : samples) {
    by_group[index(s.group)].push_back(s);
    frames.insert(s.frame);
    if (!s.torso) torso_excluded.insert(s.frame);
  }
  t.frames = frames.size();
  t.torso_excluded_frames = torso_excluded.size();
  for (std::size_t g = 0; g < kNumGroups; ++g) {
    t.rows.push_back(summarize(by_group[g], std::string(KeypointSchema::group_names()[g]), t.view,
                               ratios, mm_per_px));
  }
  t.rows.push_back(summarize(samples, kAllGroups, t.view, ratios, mm_per_px));
  return t;
}

StatsTable aggregate(const Dataset& dataset, const PredictionSet& predictions,
                     const FrameFilter& filter, const PckRatios& ratios) {
  const auto samples = collect_samples(dataset, predictions, filter);
  return aggregate_samples(samples, predictions.model(), filter.view_label(), ratios,
                           dataset.mm_per_pixel_bound());
}

AgreementReport annotator_agreement(const Dataset& dataset, const FrameFilter& filter,
                                    const PckRatios& ratios) {
  AgreementReport report;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& second = dataset.secondary(i);
    if (!second || !filter.matches(dataset.frame(i))) continue;
    ++report.double_annotated_frames;
    const Annotation& first = dataset.primary(i);
    for (std::size_t k = 0; k < kNumKeypoints; ++k) {
      const bool a = first.keypoints[k].has_value();
      const bool b = second->keypoints[k].has_value();
      if (a || b) ++report.labeled_slots;
      if (a != b) ++report.single_labeled_slots;
    }
  }
  if (report.double_annotated_frames == 0) {
    throw DomainError("no double-annotated frames in the selection; agreement report is empty");
  }
  const auto samples = collect_annotation_samples(dataset, filter);
  report.table = aggregate_samples(samples, "annotator_agreement", filter.view_label(), ratios,
                                   dataset.mm_per_pixel_bound());
  return report;
}

PairedErrors paired_errors(const Dataset& dataset, const PredictionSet& a, const PredictionSet& b,
                           const FrameFilter& filter) {
  const auto sa = collect_samples(dataset, a, filter);
  const auto sb = collect_samples(dataset, b, filter);
  PairedErrors out;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].error && sb[i].error) {
      out.a.push_back(*sa[i].error);
      out.b.push_back(*sb[i].error);
    } else {
      ++out.excluded;
    }
  }
  return out;
}

PckContingency pck_contingency(const Dataset& dataset, const PredictionSet& a,
                               const PredictionSet& b, double ratio, const FrameFilter& filter) {
  if (!(ratio > 0.0)) throw DomainError("PCK ratio must be > 0");
  const auto sa = collect_samples(dataset, a, filter);
  const auto sb = collect_samples(dataset, b, filter);
  PckContingency c;
  c.ratio = ratio;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (!sa[i].torso) continue;
    const bool ca = is_correct(sa[i], ratio);
    const bool cb = is_correct(sb[i], ratio);
    ++(ca ? c.a_correct : c.a_incorrect);
    ++(cb ? c.b_correct : c.b_incorrect);
    if (ca && !cb) ++c.only_a_correct;
    if (cb && !ca) ++c.only_b_correct;
  }
  return c;
}

}  // namespace posebench
