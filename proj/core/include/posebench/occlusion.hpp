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

#include "posebench/dataset.hpp"

namespace posebench {

/// Missing-annotation counts for one merged group within one age stratum.
struct MissingRate {
  std::size_t missing = 0;
  std::size_t slots = 0;
  std::size_t frames = 0;

  /// Absent for an empty stratum.
  std::optional<double> rate() const {
    if (slots == 0) return std::nullopt;
    return static_cast<double>(missing) / static_cast<double>(slots);
  }
};

struct GroupOcclusion {
  MissingRate overall;
  MissingRate younger;  ///< age_days < split
  MissingRate older;    ///< age_days >= split
};

struct OcclusionStats {
  double age_split_days = 0.0;
  std::array<GroupOcclusion, kNumGroups> groups{};
};

/// Fraction of primary-annotation slots marked "not annotated", per merged
/// group, overall and split at `age_split_days`.
OcclusionStats occlusion_stats(const Dataset& dataset, double age_split_days);

}  // namespace posebench
