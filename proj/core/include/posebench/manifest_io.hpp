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

// Reading and writing the JSON manifest and prediction documents.
//
// Manifest:
//   { "schema": [17 keypoint names],
//     "mm_per_pixel_bound": 0.8,                       (optional)
//     "frames": [ {id, subject, session, view, age_days, width, height} ],
//     "annotations": [ {frame_id, annotator, keypoints: [null | [x, y]] x17,
//                       role: "primary" | "secondary"} ] }  (role optional)
//
// Predictions:
//   { "model": name,
//     "frames": [ {frame_id, keypoints: [null | [x, y] | [x, y, c]] x17} ],
//     "meta": {...} }                                  (optional, ignored)
//
// Without an explicit role, the first annotation of a frame in file order is
// the primary one and the second is the secondary one.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posebench/dataset.hpp"

namespace posebench {

struct Issue {
  enum class Kind {
    kSyntax,     ///< not JSON, or wrong JSON type for a field
    kSchema,     ///< keypoint list differs from the 17 canonical names
    kReference,  ///< dangling or duplicate frame reference
    kRange,      ///< value outside its allowed range
  };
  Kind kind = Kind::kSyntax;
  bool warning = false;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;
  std::optional<Dataset> dataset;  ///< set when there are no errors

  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool ok() const { return error_count() == 0; }
};

/// Collects every finding in a manifest document instead of stopping at the
/// first. Never throws for content problems.
ValidationReport validate_manifest_text(std::string_view text);
/// Throws IoError when the file cannot be read.
ValidationReport validate_manifest_file(const std::filesystem::path& path);

/// Throws ParseError or ValidationError for the first error found. Warnings
/// (slightly out-of-frame points) are appended to `warnings` when given.
Dataset parse_manifest(std::string_view text, std::vector<std::string>* warnings = nullptr);
Dataset load_manifest(const std::filesystem::path& path,
                      std::vector<std::string>* warnings = nullptr);

/// Canonical serialization; parse_manifest(emit_manifest(d)) == d.
std::string emit_manifest(const Dataset& dataset);

/// Whitespace-only text yields an all-empty set named `fallback_model`.
PredictionSet parse_predictions(std::string_view text, const Dataset& dataset,
                                std::string_view fallback_model = "model");
PredictionSet load_predictions(const std::filesystem::path& path, const Dataset& dataset);

/// Frames with no prediction at all are omitted.
std::string emit_predictions(const PredictionSet& predictions, const Dataset& dataset);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace posebench
