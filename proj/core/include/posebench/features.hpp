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

// Frame feature matrices for representative-frame selection.
//
// CSV: one row per frame, "id,v0,v1,...". Blank lines and lines starting
// with '#' are skipped, as is a first row whose first field is "id".
//
// Binary (little-endian):
//   char[8]  magic "PBFEAT01"
//   uint64   rows
//   uint64   dim
//   rows x { uint32 id_length; char id[id_length]; float64 values[dim] }

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posebench/kmeans.hpp"

namespace posebench {

inline constexpr std::size_t kDefaultFeatureWidth = 32;
inline constexpr std::size_t kDefaultFeatureHeight = 24;

std::vector<FrameFeature> parse_features_csv(std::string_view text);
std::string emit_features_csv(std::span<const FrameFeature> features);

std::vector<FrameFeature> parse_features_binary(std::string_view bytes);
std::string emit_features_binary(std::span<const FrameFeature> features);

/// Picks the format from the magic bytes.
std::vector<FrameFeature> load_features(const std::filesystem::path& path);

/// Box-filter downsampling of an 8-bit grayscale image (row-major) to
/// out_width x out_height, scaled to [0, 1]. Throws DomainError when the
/// output is larger than the input or sizes do not match.
std::vector<double> downsample_grayscale(std::span<const std::uint8_t> pixels, std::size_t width,
                                         std::size_t height,
                                         std::size_t out_width = kDefaultFeatureWidth,
                                         std::size_t out_height = kDefaultFeatureHeight);

}  // namespace posebench
