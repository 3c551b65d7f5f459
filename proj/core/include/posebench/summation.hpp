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
#include <optional>
#include <span>

namespace posebench {

/// Neumaier compensated accumulator. Results depend only on the order of
/// add() calls, so callers fix that order to get reproducible sums.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + compensation_; }
  std::size_t count() const { return count_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  std::size_t count_ = 0;
};

double compensated_sum(std::span<const double> values);

/// Compensated mean; nullopt for an empty span.
std::optional<double> compensated_mean(std::span<const double> values);

/// Two-pass sample standard deviation (n - 1 denominator); nullopt for n < 2.
std::optional<double> sample_stddev(std::span<const double> values);

}  // namespace posebench
