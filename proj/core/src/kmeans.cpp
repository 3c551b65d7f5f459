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

#include "posebench/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>

#include "posebench/error.hpp"
#include "posebench/summation.hpp"

namespace posebench {
namespace {

using Vec = std::vector<double>;

double squared_distance(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(std::span<const FrameFeature> points, std::size_t k) {
  if (points.empty()) throw DomainError("k-means: no points");
  if (k < 1) throw DomainError("k-means: k must be >= 1");
  if (k > points.size()) {
    throw DomainError("k-means: k = " + std::to_string(k) + " exceeds the number of points (" +
                      std::to_string(points.size()) + ")");
  }
  const std::size_t dim = points.front().values.size();
  if (dim == 0) throw DomainError("k-means: feature vectors are empty");
  for (const auto& p : points) {
    if (p.values.size() != dim) {
      throw DomainError("k-means: feature '" + p.id + "' has dimension " +
                        std::to_string(p.values.size()) + ", expected " + std::to_string(dim));
    }
  }
}

std::vector<Vec> kmeans_plus_plus(std::span<const FrameFeature> points, std::size_t k,
                                  std::mt19937_64& rng) {
  const std::size_t n = points.size();
  std::vector<Vec> centroids;
  centroids.reserve(k);
  std::size_t first = std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
  centroids.push_back(points[first].values);

  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i].values, centroids[0]);

  while (centroids.size() < k) {
    const double total = compensated_sum(d2);
    std::size_t pick = n - 1;
    if (total > 0.0) {
      const double target = uniform01(rng) * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc > target && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
      // Rounding can leave the scan short of target; take the last positive weight.
      if (acc <= target) {
        for (std::size_t i = n; i-- > 0;) {
          if (d2[i] > 0.0) {
            pick = i;
            break;
          }
        }
      }
    } else {
      // Every point coincides with a chosen centroid (duplicates).
      pick = std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
    }
    centroids.push_back(points[pick].values);
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], squared_distance(points[i].values, centroids.back()));
    }
  }
  return centroids;
}

/// Nearest centroid per point (ties to the lower index); returns the objective.
double assign(std::span<const FrameFeature> points, const std::vector<Vec>& centroids,
              std::vector<std::size_t>& assignment, std::vector<double>& cost) {
  CompensatedSum objective;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < centroids.size(); ++c) {
      const double d = squared_distance(points[i].values, centroids[c]);
      if (d < best) {
        best = d;
        best_c = c;
      }
    }
    assignment[i] = best_c;
    cost[i] = best;
    objective.add(best);
  }
  return objective.value();
}

void update(std::span<const FrameFeature> points, const std::vector<std::size_t>& assignment,
            const std::vector<double>& cost, std::vector<Vec>& centroids) {
  const std::size_t dim = points.front().values.size();
  std::vector<Vec> sums(centroids.size(), Vec(dim, 0.0));
  std::vector<std::size_t> counts(centroids.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Vec& s = sums[assignment[i]];
    for (std::size_t d = 0; d < dim; ++d) s[d] += points[i].values[d];
    ++counts[assignment[i]];
  }
  std::vector<bool> taken(points.size(), false);
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    if (counts[c] > 0) {
      for (std::size_t d = 0; d < dim; ++d) {
        centroids[c][d] = sums[c][d] / static_cast<double>(counts[c]);
      }
      continue;
    }
    // Empty cluster: re-seed from the point farthest from its centroid.
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!taken[i] && cost[i] > far_d) {
        far_d = cost[i];
        far = i;
      }
    }
    taken[far] = true;
    centroids[c] = points[far].values;
  }
}

}  // namespace

KMeansResult kmeans(std::span<const FrameFeature> points, std::size_t k, std::uint64_t seed,
                    std::size_t max_iter) {
  validate(points, k);
  std::mt19937_64 rng(seed);

  KMeansResult r;
  r.centroids = kmeans_plus_plus(points, k, rng);
  r.assignment.assign(points.size(), 0);
  std::vector<double> cost(points.size());
  r.objective_history.push_back(assign(points, r.centroids, r.assignment, cost));

  std::vector<std::size_t> next(points.size());
  while (r.iterations < max_iter) {
    update(points, r.assignment, cost, r.centroids);
    ++r.iterations;
    r.objective_history.push_back(assign(points, r.centroids, next, cost));
    if (next == r.assignment) {
      r.converged = true;
      break;
    }
    r.assignment.swap(next);
  }
  return r;
}

std::vector<std::string> nearest_distinct_frames(std::span<const FrameFeature> points,
                                                 const std::vector<std::vector<double>>& centroids) {
  if (centroids.size() > points.size()) {
    throw DomainError("more centroids than frames to select from");
  }
  // Greedy matching in order of (distance, frame id, centroid).
  std::vector<std::tuple<double, const std::string*, std::size_t, std::size_t>> pairs;
  pairs.reserve(points.size() * centroids.size());
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      pairs.emplace_back(squared_distance(points[i].values, centroids[c]), &points[i].id, c, i);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (*std::get<1>(a) != *std::get<1>(b)) return *std::get<1>(a) < *std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  });
  std::vector<bool> centroid_done(centroids.size(), false);
  std::vector<bool> frame_used(points.size(), false);
  std::vector<std::string> out;
  for (const auto& [d, id, c, i] : pairs) {
    if (centroid_done[c] || frame_used[i]) continue;
    centroid_done[c] = true;
    frame_used[i] = true;
    out.push_back(*id);
    if (out.size() == centroids.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> select_frames(std::span<const FrameFeature> points, std::size_t k,
                                       std::uint64_t seed) {
  const KMeansResult r = kmeans(points, k, seed);
  auto ids = nearest_distinct_frames(points, r.centroids);
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw DomainError("frame ids are not unique");
  }
  return ids;
}

}  // namespace posebench
