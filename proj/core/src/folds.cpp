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

#include "posebench/folds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "json.hpp"
#include "posebench/error.hpp"

namespace posebench {

FoldAssignment subject_exclusive_folds(const std::map<std::string, std::size_t>& subject_frames,
                                       std::size_t n_folds) {
  if (n_folds == 0) throw DomainError("number of folds must be >= 1");
  if (n_folds > subject_frames.size()) {
    throw DomainError("cannot split " + std::to_string(subject_frames.size()) + " subjects into " +
                      std::to_string(n_folds) + " folds");
  }
  std::vector<std::pair<std::string, std::size_t>> order(subject_frames.begin(), subject_frames.end());
  // std::map iteration is already id-ascending; stable_sort keeps that for ties.
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  FoldAssignment out;
  out.n_folds = n_folds;
  out.totals.assign(n_folds, 0);
  out.subjects.assign(n_folds, 0);
  for (const auto& [subject, count] : order) {
    const auto smallest = static_cast<std::size_t>(
        std::min_element(out.totals.begin(), out.totals.end()) - out.totals.begin());
    out.assignment[subject] = smallest;
    out.totals[smallest] += count;
    ++out.subjects[smallest];
  }
  return out;
}

std::map<std::string, std::size_t> subject_frame_counts(const Dataset& dataset) {
  std::map<std::string, std::size_t> counts;
  for (const auto& f : dataset.frames()) ++counts[f.subject];
  return counts;
}

void tag_validation(FoldAssignment& folds, const Dataset& dataset, double fraction,
                    std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction < 1.0)) throw DomainError("validation fraction must lie in [0, 1)");
  folds.validation.assign(folds.n_folds, {});
  std::mt19937_64 rng(seed);
  for (std::size_t f = 0; f < folds.n_folds; ++f) {
    std::vector<std::string> training;
    for (const auto& frame : dataset.frames()) {
      auto it = folds.assignment.find(frame.subject);
      if (it == folds.assignment.end()) {
        throw DomainError("subject '" + frame.subject + "' is not in the fold assignment");
      }
      if (it->second != f) training.push_back(frame.id);
    }
    // Fisher-Yates with an explicit bounded draw so the order is portable.
    for (std::size_t i = training.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(training[i - 1], training[j]);
    }
    const auto take = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(training.size())));
    training.resize(take);
    std::sort(training.begin(), training.end());
    folds.validation[f] = std::move(training);
  }
}

std::string to_json(const FoldAssignment& folds, int indent) {
  nlohmann::ordered_json j;
  j["n_folds"] = folds.n_folds;
  nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
  for (const auto& [subject, fold] : folds.assignment) assignment[subject] = fold;
  j["assignment"] = std::move(assignment);
  j["totals"] = folds.totals;
  j["subjects"] = folds.subjects;
  if (!folds.validation.empty()) j["validation"] = folds.validation;
  return j.dump(indent) + "\n";
}

}  // namespace posebench
