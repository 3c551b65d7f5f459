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

namespace posebench {

inline constexpr std::size_t kNumKeypoints = 17;
inline constexpr std::size_t kNumGroups = 9;

/// COCO-ordered body keypoints.
enum class Keypoint : std::size_t {
  kNose = 0,
  kLeftEye,
  kRightEye,
  kLeftEar,
  kRightEar,
  kLeftShoulder,
  kRightShoulder,
  kLeftElbow,
  kRightElbow,
  kLeftWrist,
  kRightWrist,
  kLeftHip,
  kRightHip,
  kLeftKnee,
  kRightKnee,
  kLeftAnkle,
  kRightAnkle,
};

/// Left/right keypoint pairs pooled into one evaluation category.
enum class Group : std::size_t {
  kNose = 0,
  kEye,
  kEar,
  kShoulder,
  kElbow,
  kWrist,
  kHip,
  kKnee,
  kAnkle,
};

constexpr std::size_t index(Keypoint k) { return static_cast<std::size_t>(k); }
constexpr std::size_t index(Group g) { return static_cast<std::size_t>(g); }

/// Fixed 17-keypoint schema with its merge map onto 9 groups.
class KeypointSchema {
 public:
  static const std::array<std::string_view, kNumKeypoints>& keypoint_names();
  static const std::array<std::string_view, kNumGroups>& group_names();

  static std::string_view name(Keypoint k) { return keypoint_names()[index(k)]; }
  static std::string_view name(Group g) { return group_names()[index(g)]; }

  static Group group_of(Keypoint k);
  static Group group_of(std::size_t keypoint_index) {
    return group_of(static_cast<Keypoint>(keypoint_index));
  }

  /// Keypoints belonging to a group: one for nose, two (left, right) otherwise.
  static std::span<const Keypoint> members(Group g);

  static std::optional<Keypoint> find_keypoint(std::string_view name);
  static std::optional<Group> find_group(std::string_view name);

  /// Empty when `names` equals the canonical list; otherwise a description
  /// of the first mismatch.
  static std::optional<std::string> mismatch(const std::vector<std::string>& names);
};

}  // namespace posebench
