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

#include "posebench/occlusion.hpp"

#include "posebench/error.hpp"

namespace posebench {

OcclusionStats occlusion_stats(const Dataset& dataset, double age_split_days) {
  if (!(age_split_days >= 0.0)) throw DomainError("age split must be >= 0");
  OcclusionStats out;
  out.age_split_days = age_split_days;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const bool younger = dataset.frame(i).age_days < age_split_days;
    const Annotation& a = dataset.primary(i);
    for (std::size_t g = 0; g < kNumGroups; ++g) {
      GroupOcclusion& go = out.groups[g];
      MissingRate& stratum = younger ? go.younger : go.older;
      for (Keypoint k : KeypointSchema::members(static_cast<Group>(g))) {
        const bool missing = !a.keypoints[index(k)].has_value();
        for (MissingRate* r : {&go.overall, &stratum}) {
          ++r->slots;
          if (missing) ++r->missing;
        }
      }
      ++go.overall.frames;
      ++stratum.frames;
    }
  }
  return out;
}

}  // namespace posebench
