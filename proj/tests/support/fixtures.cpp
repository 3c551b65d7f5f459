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

#include "fixtures.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace posebench::testing {
namespace {

// Supine pose in torso units, origin at the torso center, y down.
constexpr std::array<Point, kNumKeypoints> kTemplate = {{
    {0.00, -0.95},                  // nose
    {-0.08, -1.02}, {0.08, -1.02},  // eyes
    {-0.17, -0.97}, {0.17, -0.97},  // ears
    {-0.30, -0.50}, {0.30, -0.50},  // shoulders
    {-0.55, -0.10}, {0.55, -0.10},  // elbows
    {-0.60, 0.30},  {0.60, 0.30},   // wrists
    {-0.22, 0.50},  {0.22, 0.50},   // hips
    {-0.35, 0.95},  {0.35, 0.95},   // knees
    {-0.30, 1.40},  {0.30, 1.40},   // ankles
}};

// Shoulder-to-hip distance of the template on one side.
double template_torso() {
  const Point& s = kTemplate[index(Keypoint::kLeftShoulder)];
  const Point& h = kTemplate[index(Keypoint::kLeftHip)];
  return std::hypot(s.x - h.x, s.y - h.y);
}

std::string padded(const char* prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%04zu", prefix, i);
  return buf;
}

double confidence_for(const NoiseSpec& spec, double error, Gaussian& g) {
  const double scale = 2.0 * spec.sigma;
  switch (spec.confidence) {
    case ConfidenceMode::kRandom:
      return g.uniform();
    case ConfidenceMode::kCorrelated:
      return 1.0 / (1.0 + error / scale);
    case ConfidenceMode::kInverted:
      return 1.0 - 1.0 / (1.0 + error / scale);
    case ConfidenceMode::kConstant:
      return spec.constant_confidence;
    case ConfidenceMode::kNone:
      break;
  }
  return 0.0;
}

}  // namespace

double Gaussian::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

FrameEntry posed_frame(const std::string& id, const std::string& subject, const std::string& view,
                       double age_days, double torso, Point center) {
  FrameEntry e;
  e.record = FrameRecord{id, subject, "T1", View::parse(view), age_days, 1280, 960};
  e.primary.annotator = "A";
  const double scale = torso / template_torso();
  for (std::size_t k = 0; k < kNumKeypoints; ++k) {
    e.primary.keypoints[k] = Point{center.x + scale * kTemplate[k].x, center.y + scale * kTemplate[k].y};
  }
  return e;
}

Dataset make_dataset(const DatasetSpec& spec) {
  Gaussian g(spec.seed);
  std::vector<FrameEntry> entries;
  const std::array<const char*, 3> sessions = {"T1", "T2", "T3"};
  for (std::size_t i = 0; i < spec.frames; ++i) {
    const std::size_t subject = i % spec.subjects;
    const std::string view = spec.views[(i / spec.subjects) % spec.views.size()];
    const double torso = spec.torso * (1.0 + spec.torso_jitter * (g.uniform() - 0.5));
    const double age = 20.0 + 100.0 * g.uniform();
    const Point center{400.0 + 480.0 * g.uniform(), 300.0 + 360.0 * g.uniform()};
    FrameEntry e = posed_frame(padded("f", i), padded("s", subject), view, age, torso, center);
    e.record.session = sessions[i % sessions.size()];
    for (auto& p : e.primary.keypoints) {
      p->x += g.normal() * 3.0;
      p->y += g.normal() * 3.0;
      if (g.uniform() < spec.annotation_missing) p.reset();
    }
    if (g.uniform() < spec.double_annotated) {
      Annotation b;
      b.annotator = "B";
      for (std::size_t k = 0; k < kNumKeypoints; ++k) {
        const auto& a = e.primary.keypoints[k];
        if (!a) continue;
        if (g.uniform() < 0.02) continue;
        b.keypoints[k] = Point{a->x + g.normal() * spec.annotator_sigma, a->y + g.normal() * spec.annotator_sigma};
      }
      e.secondary = b;
    }
    entries.push_back(std::move(e));
  }
  return Dataset(std::move(entries));
}

PredictionSet make_predictions(const Dataset& dataset, const NoiseSpec& spec) {
  Gaussian g(spec.seed);
  std::vector<FramePredictions> frames(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& frame = dataset.frame(i);
    auto it = spec.view_sigma.find(frame.view.label());
    const double sigma = it == spec.view_sigma.end() ? spec.sigma : it->second;
    const Annotation& truth = dataset.primary(i);
    for (std::size_t k = 0; k < kNumKeypoints; ++k) {
      // Draw noise for every slot so the stream does not depend on occlusion.
      const double dx = g.normal() * sigma;
      const double dy = g.normal() * sigma;
      const double u_missing = g.uniform();
      Point base;
      if (truth.keypoints[k]) {
        base = *truth.keypoints[k];
      } else if (spec.predict_unannotated) {
        base = Point{frame.width / 2.0, frame.height / 2.0};
      } else {
        continue;
      }
      if (u_missing < spec.missing) continue;
      KeypointPrediction p{{base.x + dx, base.y + dy}, std::nullopt};
      if (spec.confidence != ConfidenceMode::kNone) {
        p.confidence = confidence_for(spec, std::hypot(dx, dy), g);
      }
      frames[i][k] = p;
    }
  }
  return PredictionSet(spec.model, dataset, std::move(frames));
}

namespace {

template <class F>
Dataset map_dataset(const Dataset& d, double size_factor, F f) {
  std::vector<FrameEntry> entries;
  auto map_ann = [&f](Annotation a) {
    for (auto& p : a.keypoints) {
      if (p) *p = f(*p);
    }
    return a;
  };
  for (std::size_t i = 0; i < d.size(); ++i) {
    FrameEntry e{d.frame(i), map_ann(d.primary(i)), std::nullopt};
    e.record.width = static_cast<int>(e.record.width * size_factor);
    e.record.height = static_cast<int>(e.record.height * size_factor);
    if (d.secondary(i)) e.secondary = map_ann(*d.secondary(i));
    entries.push_back(std::move(e));
  }
  return Dataset(std::move(entries), d.mm_per_pixel_bound());
}

template <class F>
PredictionSet map_predictions(const PredictionSet& p, const Dataset& d, F f) {
  std::vector<FramePredictions> frames(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    frames[i] = p.frame(i);
    for (auto& s : frames[i]) {
      if (s) s->position = f(s->position);
    }
  }
  return PredictionSet(p.model(), d, std::move(frames));
}

}  // namespace

Dataset scale_dataset(const Dataset& d, double factor) {
  return map_dataset(d, factor, [factor](Point q) { return Point{q.x * factor, q.y * factor}; });
}

PredictionSet scale_predictions(const PredictionSet& p, const Dataset& scaled_dataset, double factor) {
  return map_predictions(p, scaled_dataset, [factor](Point q) { return Point{q.x * factor, q.y * factor}; });
}

Dataset quantize_dataset(const Dataset& d, double step) {
  return map_dataset(d, 1.0, [step](Point q) { return Point{std::round(q.x / step) * step, std::round(q.y / step) * step}; });
}

PredictionSet quantize_predictions(const PredictionSet& p, const Dataset& quantized_dataset, double step) {
  return map_predictions(p, quantized_dataset,
                         [step](Point q) { return Point{std::round(q.x / step) * step, std::round(q.y / step) * step}; });
}

std::vector<FrameFeature> blob_features(std::size_t per_blob, double sigma, std::uint64_t seed) {
  Gaussian g(seed);
  const std::array<Point, 3> centers = {{{0.0, 0.0}, {10.0, 0.0}, {0.0, 10.0}}};
  std::vector<FrameFeature> out;
  for (std::size_t b = 0; b < centers.size(); ++b) {
    for (std::size_t i = 0; i < per_blob; ++i) {
      char id[32];
      std::snprintf(id, sizeof(id), "b%zu_%03zu", b, i);
      out.push_back({id, {centers[b].x + sigma * g.normal(), centers[b].y + sigma * g.normal()}});
    }
  }
  return out;
}

}  // namespace posebench::testing
