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

// Synthetic datasets and prediction sets for tests.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "posebench/dataset.hpp"
#include "posebench/kmeans.hpp"

namespace posebench::testing {

/// Portable standard normal draws (Box-Muller over mt19937_64).
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double normal();
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct DatasetSpec {
  std::size_t frames = 20;
  std::size_t subjects = 4;
  std::vector<std::string> views = {"top", "diagonal"};
  double torso = 306.0;          ///< nominal torso length in pixels
  double torso_jitter = 0.2;     ///< relative spread of per-frame scale
  double annotation_missing = 0.05;
  double double_annotated = 0.0;  ///< fraction of frames with a second annotation
  double annotator_sigma = 1.5;   ///< noise of the second annotator
  std::uint64_t seed = 1;
};

Dataset make_dataset(const DatasetSpec& spec);

enum class ConfidenceMode {
  kNone,        ///< predictions without confidence
  kRandom,      ///< uniform in [0, 1], independent of error
  kCorrelated,  ///< higher confidence for smaller error
  kInverted,    ///< higher confidence for larger error
  kConstant,    ///< every prediction gets `constant_confidence`
};

struct NoiseSpec {
  std::string model = "model";
  double sigma = 2.0;  ///< per-coordinate Gaussian noise, pixels
  std::map<std::string, double> view_sigma;  ///< overrides sigma per view label
  double missing = 0.0;                      ///< probability a slot is not predicted
  ConfidenceMode confidence = ConfidenceMode::kRandom;
  double constant_confidence = 0.7;
  bool predict_unannotated = true;  ///< also emit predictions on occluded slots
  std::uint64_t seed = 2;
};

PredictionSet make_predictions(const Dataset& dataset, const NoiseSpec& spec);

/// Same predictions with every coordinate multiplied by `factor`.
PredictionSet scale_predictions(const PredictionSet& p, const Dataset& scaled_dataset, double factor);
/// Dataset with all coordinates and frame sizes multiplied by `factor`.
Dataset scale_dataset(const Dataset& d, double factor);

/// Copies with every coordinate rounded to a multiple of `step`. With a
/// power-of-two step the coordinates scale exactly by small integers.
Dataset quantize_dataset(const Dataset& d, double step);
PredictionSet quantize_predictions(const PredictionSet& p, const Dataset& quantized_dataset, double step);

/// Frame entry with a plausible, fully annotated pose at `center` with the
/// given torso length.
FrameEntry posed_frame(const std::string& id, const std::string& subject, const std::string& view,
                       double age_days, double torso, Point center = {640.0, 480.0});

/// Three well-separated Gaussian blobs in 2-D: centers (0,0), (10,0), (0,10).
std::vector<FrameFeature> blob_features(std::size_t per_blob, double sigma, std::uint64_t seed);

}  // namespace posebench::testing
