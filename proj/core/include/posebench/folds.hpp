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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "posebench/dataset.hpp"

namespace posebench {

/// Subject-exclusive cross-validation partition.
struct FoldAssignment {
  std::size_t n_folds = 0;
  std::map<std::string, std::size_t> assignment;  ///< subject -> fold
  std::vector<std::size_t> totals;                ///< frames per fold
  std::vector<std::size_t> subjects;              ///< subjects per fold
  /// Optional per-fold validation frame ids, drawn from that fold's training set.
  std::vector<std::vector<std::string>> validation;
};

/// Greedy balanced partition: subjects by frame count descending (ties by
/// subject id), each placed into the fold with the fewest frames so far
/// (ties to the lowest fold index). Every subject lands in exactly one fold
/// and max - min fold total <= largest subject count.
///
/// Throws DomainError when n_folds is 0 or exceeds the number of subjects.
FoldAssignment subject_exclusive_folds(const std::map<std::string, std::size_t>& subject_frames,
                                       std::size_t n_folds = 5);

std::map<std::string, std::size_t> subject_frame_counts(const Dataset& dataset);

/// Tags round(fraction * training frames) seeded-random frames of each fold's
/// training set (all frames outside the fold) as validation frames.
void tag_validation(FoldAssignment& folds, const Dataset& dataset, double fraction,
                    std::uint64_t seed);

/// {"n_folds", "assignment": {subject: fold}, "totals", "subjects"[, "validation"]}
std::string to_json(const FoldAssignment& folds, int indent = 2);

}  // namespace posebench
