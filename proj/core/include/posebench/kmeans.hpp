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

// k-means clustering for picking representative frames from a recording.
//
// Initialization is k-means++ driven by std::mt19937_64 (a fully specified
// engine) with uniform doubles formed from the top 53 bits of each draw, so a
// given seed produces the same clustering on every platform. Lloyd
// iterations run until the assignment stops changing or max_iter is reached.
// A cluster that loses all its points is moved onto the point farthest from
// its current centroid.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace posebench {

struct FrameFeature {
  std::string id;
  std::vector<double> values;

  friend bool operator==(const FrameFeature&, const FrameFeature&) = default;
};

struct KMeansResult {
  std::vector<std::vector<double>> centroids;
  std::vector<std::size_t> assignment;  ///< centroid index per input point
  /// Objective after each assignment step; non-increasing.
  std::vector<double> objective_history;
  std::size_t iterations = 0;
  bool converged = false;

  double objective() const { return objective_history.back(); }
};

/// Throws DomainError for k < 1, k > n, an empty input, or features of
/// unequal or zero dimension.
KMeansResult kmeans(std::span<const FrameFeature> points, std::size_t k, std::uint64_t seed,
                    std::size_t max_iter = 300);

/// For each centroid the nearest frame; a frame nearest to several centroids
/// goes to the closest one and the others take their next-nearest free frame.
/// Distance ties go to the lower frame id. Returns k distinct ids, sorted.
std::vector<std::string> select_frames(std::span<const FrameFeature> points, std::size_t k = 30,
                                       std::uint64_t seed = 0);

/// Same selection given a finished clustering.
std::vector<std::string> nearest_distinct_frames(std::span<const FrameFeature> points,
                                                 const std::vector<std::vector<double>>& centroids);

}  // namespace posebench
