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


#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posebench/kmeans.hpp"
#include "posebench/metrics.hpp"
#include "posebench/reliability.hpp"
#include "posebench/special_functions.hpp"
#include "posebench/stats.hpp"

namespace {

using namespace posebench;

// Paper-scale workload: 4500 frames, every keypoint annotated and predicted.
struct Workload {
  Dataset dataset;
  PredictionSet predictions;
};

const Workload& workload() {
  static const Workload w = [] {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> noise(0.0, 4.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<FrameEntry> entries;
    std::vector<FramePredictions> preds;
    for (int i = 0; i < 4500; ++i) {
      FrameEntry e;
      e.record = FrameRecord{"f" + std::to_string(100000 + i), "s" + std::to_string(i % 31), "T1",
                             i % 2 ? View::top() : View::diagonal(), 30.0, 1280, 960};
      FramePredictions p;
      for (std::size_t k = 0; k < kNumKeypoints; ++k) {
        const Point truth{300.0 + 600.0 * unit(rng), 200.0 + 500.0 * unit(rng)};
        e.primary.keypoints[k] = truth;
        p[k] = KeypointPrediction{{truth.x + noise(rng), truth.y + noise(rng)}, unit(rng)};
      }
      entries.push_back(std::move(e));
      preds.push_back(p);
    }
    Dataset d(std::move(entries));
    PredictionSet ps("bench", d, std::move(preds));
    return Workload{std::move(d), std::move(ps)};
  }();
  return w;
}

void BM_Aggregate(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(aggregate(w.dataset, w.predictions));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.dataset.size() * kNumKeypoints));
}
BENCHMARK(BM_Aggregate)->Unit(benchmark::kMillisecond);

void BM_ThresholdCurve(benchmark::State& state) {
  const auto& w = workload();
  const auto points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(threshold_curve(w.dataset, w.predictions, points));
}
BENCHMARK(BM_ThresholdCurve)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PairedTTest(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n(5.0, 2.0);
  std::vector<double> a(static_cast<std::size_t>(state.range(0))), b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = n(rng);
    b[i] = n(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(paired_t_test(a, b));
}
BENCHMARK(BM_PairedTTest)->Arg(1000)->Arg(76500);

void BM_IncompleteBeta(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x = std::fmod(x + 0.0137, 1.0);
    benchmark::DoNotOptimize(special::regularized_incomplete_beta(12.5, 0.5, x));
  }
}
BENCHMARK(BM_IncompleteBeta);

void BM_GammaUpper(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x = std::fmod(x + 0.37, 40.0);
    benchmark::DoNotOptimize(special::regularized_gamma_upper(0.5, x));
  }
}
BENCHMARK(BM_GammaUpper);

void BM_SelectFrames(benchmark::State& state) {
  // 32x24 features, as produced by the default downsampling.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<FrameFeature> pts;
  for (int i = 0; i < state.range(0); ++i) {
    std::vector<double> v(768);
    for (auto& x : v) x = unit(rng);
    pts.push_back({"f" + std::to_string(i), std::move(v)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(select_frames(pts, 30, 7));
}
BENCHMARK(BM_SelectFrames)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
