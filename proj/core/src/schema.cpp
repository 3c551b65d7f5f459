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

#include "posebench/schema.hpp"

#include <string>

namespace posebench {
namespace {

constexpr std::array<std::string_view, kNumKeypoints> kKeypointNames = {
    "nose",           "left_eye",       "right_eye",  "left_ear",
    "right_ear",      "left_shoulder",  "right_shoulder",
    "left_elbow",     "right_elbow",    "left_wrist", "right_wrist",
    "left_hip",       "right_hip",      "left_knee",  "right_knee",
    "left_ankle",     "right_ankle",
};

constexpr std::array<std::string_view, kNumGroups> kGroupNames = {
    "nose", "eye", "ear", "shoulder", "elbow", "wrist", "hip", "knee", "ankle",
};

constexpr std::array<Keypoint, 17> kMembers = {
    Keypoint::kNose,
    Keypoint::kLeftEye,      Keypoint::kRightEye,
    Keypoint::kLeftEar,      Keypoint::kRightEar,
    Keypoint::kLeftShoulder, Keypoint::kRightShoulder,
    Keypoint::kLeftElbow,    Keypoint::kRightElbow,
    Keypoint::kLeftWrist,    Keypoint::kRightWrist,
    Keypoint::kLeftHip,      Keypoint::kRightHip,
    Keypoint::kLeftKnee,     Keypoint::kRightKnee,
    Keypoint::kLeftAnkle,    Keypoint::kRightAnkle,
};

}  // namespace

const std::array<std::string_view, kNumKeypoints>& KeypointSchema::keypoint_names() {
  return kKeypointNames;
}

const std::array<std::string_view, kNumGroups>& KeypointSchema::group_names() {
  return kGroupNames;
}

Group KeypointSchema::group_of(Keypoint k) {
  // Nose is 0; every later pair (2i-1, 2i) belongs to group i.
  const std::size_t i = index(k);
  return static_cast<Group>((i + 1) / 2);
}

std::span<const Keypoint> KeypointSchema::members(Group g) {
  const std::size_t gi = index(g);
  if (gi == 0) return {kMembers.data(), 1};
  return {kMembers.data() + 2 * gi - 1, 2};
}

std::optional<Keypoint> KeypointSchema::find_keypoint(std::string_view name) {
  for (std::size_t i = 0; i < kNumKeypoints; ++i) {
    if (kKeypointNames[i] == name) return static_cast<Keypoint>(i);
  }
  return std::nullopt;
}

std::optional<Group> KeypointSchema::find_group(std::string_view name) {
  for (std::size_t i = 0; i < kNumGroups; ++i) {
    if (kGroupNames[i] == name) return static_cast<Group>(i);
  }
  return std::nullopt;
}

std::optional<std::string> KeypointSchema::mismatch(const std::vector<std::string>& names) {
  if (names.size() != kNumKeypoints) {
    return "expected " + std::to_string(kNumKeypoints) + " keypoints, got " +
           std::to_string(names.size());
  }
  for (std::size_t i = 0; i < kNumKeypoints; ++i) {
    if (names[i] != kKeypointNames[i]) {
      return "keypoint " + std::to_string(i) + " is '" + names[i] + "', expected '" +
             std::string(kKeypointNames[i]) + "'";
    }
  }
  return std::nullopt;
}

}  // namespace posebench
