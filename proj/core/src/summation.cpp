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

#include "posebench/summation.hpp"

#include <cmath>

namespace posebench {

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::fabs(sum_) >= std::fabs(v)) {
    compensation_ += (sum_ - t) + v;
  } else {
    compensation_ += (v - t) + sum_;
  }
  sum_ = t;
  ++count_;
}

double compensated_sum(std::span<const double> values) {
  CompensatedSum s;
  for (double v : values) s.add(v);
  return s.value();
}

std::optional<double> compensated_mean(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  return compensated_sum(values) / static_cast<double>(values.size());
}

std::optional<double> sample_stddev(std::span<const double> values) {
  if (values.size() < 2) return std::nullopt;
  const double mean = *compensated_mean(values);
  CompensatedSum ss;
  for (double v : values) {
    const double d = v - mean;
    ss.add(d * d);
  }
  return std::sqrt(ss.value() / static_cast<double>(values.size() - 1));
}

}  // namespace posebench
