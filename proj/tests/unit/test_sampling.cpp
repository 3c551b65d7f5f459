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


#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "posebench/error.hpp"
#include "posebench/features.hpp"
#include "posebench/folds.hpp"
#include "posebench/kmeans.hpp"
#include "posebench/manifest_io.hpp"

using namespace posebench;

namespace {

std::vector<FrameFeature> four_points() {
  return {{"p0", {0, 0}}, {"p1", {0, 1}}, {"p2", {10, 10}}, {"p3", {10, 11}}};
}

double sq(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

TEST_CASE("kmeans: well separated pairs") {
  const auto pts = four_points();
  const auto r = kmeans(pts, 2, 42);
  CHECK(r.converged);
  CHECK(r.assignment[0] == r.assignment[1]);
  CHECK(r.assignment[2] == r.assignment[3]);
  CHECK(r.assignment[0] != r.assignment[2]);
  const auto& c_low = r.centroids[r.assignment[0]];
  const auto& c_high = r.centroids[r.assignment[2]];
  CHECK(c_low == std::vector<double>{0, 0.5});
  CHECK(c_high == std::vector<double>{10, 10.5});
  const auto ids = select_frames(pts, 2, 42);
  REQUIRE(ids.size() == 2);
  CHECK((ids[0] == "p0" || ids[0] == "p1"));
  CHECK((ids[1] == "p2" || ids[1] == "p3"));
}

TEST_CASE("kmeans: k = n") {
  const auto pts = four_points();
  const auto r = kmeans(pts, 4, 1);
  CHECK(r.objective() == 0.0);
  CHECK(select_frames(pts, 4, 1) == std::vector<std::string>{"p0", "p1", "p2", "p3"});
}

TEST_CASE("kmeans: errors") {
  const auto pts = four_points();
  CHECK_THROWS_AS(kmeans(pts, 5, 0), DomainError);
  CHECK_THROWS_AS(kmeans(pts, 0, 0), DomainError);
  std::vector<FrameFeature> ragged = {{"a", {0, 0}}, {"b", {1}}};
  CHECK_THROWS_AS(kmeans(ragged, 1, 0), DomainError);
}

TEST_CASE("kmeans: duplicate points are allowed") {
  std::vector<FrameFeature> pts = {{"a", {1, 1}}, {"b", {1, 1}}, {"c", {1, 1}}, {"d", {5, 5}}};
  const auto r = kmeans(pts, 3, 9);
  CHECK(r.centroids.size() == 3);
  const auto ids = select_frames(pts, 3, 9);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == 3);
}

TEST_CASE("kmeans: objective non-increasing and final assignment a fixpoint") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    testing::Gaussian g(seed + 1000);
    std::vector<FrameFeature> pts;
    for (int i = 0; i < 200; ++i) {
      pts.push_back({"x" + std::to_string(i), {g.normal(), g.normal(), g.normal() * 2}});
    }
    const auto r = kmeans(pts, 8, seed);
    for (std::size_t i = 1; i < r.objective_history.size(); ++i) {
      CHECK(r.objective_history[i] <= r.objective_history[i - 1] * (1 + 1e-12));
    }
    if (r.converged) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double own = sq(pts[i].values, r.centroids[r.assignment[i]]);
        for (const auto& c : r.centroids) CHECK(own <= sq(pts[i].values, c) + 1e-12);
      }
    }
  }
}

TEST_CASE("kmeans: deterministic for a fixed seed") {
  const auto pts = testing::blob_features(40, 1.5, 3);
  const auto a = kmeans(pts, 5, 77);
  const auto b = kmeans(pts, 5, 77);
  CHECK(a.centroids == b.centroids);
  CHECK(a.assignment == b.assignment);
  CHECK(select_frames(pts, 5, 77) == select_frames(pts, 5, 77));
}

TEST_CASE("kmeans: blob recovery") {
  const std::vector<std::vector<double>> truth = {{0, 0}, {10, 0}, {0, 10}};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto pts = testing::blob_features(30, 0.1, seed + 500);
    const auto r = kmeans(pts, 3, seed);
    for (const auto& t : truth) {
      double best = 1e300;
      for (const auto& c : r.centroids) best = std::min(best, std::sqrt(sq(c, t)));
      CHECK(best < 0.2);
    }
    const auto ids = select_frames(pts, 3, seed);
    REQUIRE(ids.size() == 3);
    std::set<char> blobs;
    for (const auto& id : ids) blobs.insert(id[1]);
    CHECK(blobs.size() == 3);
  }
}

TEST_CASE("select_frames: distinct sorted ids when centroids share a nearest frame") {
  std::vector<FrameFeature> pts = {{"a", {0}}, {"b", {1}}, {"c", {10}}};
  const auto ids = nearest_distinct_frames(pts, {{0.4}, {0.45}});
  CHECK(ids == std::vector<std::string>{"a", "b"});
  // Ties in distance go to the lower id.
  std::vector<FrameFeature> tie = {{"z", {1}}, {"y", {-1}}};
  CHECK(nearest_distinct_frames(tie, {{0.0}}) == std::vector<std::string>{"y"});
}

TEST_CASE("features: CSV and binary round trip") {
  const std::vector<FrameFeature> f = {{"f1", {0.0, 0.25, 1.0 / 3.0}}, {"f2", {1e-300, -2.5, 7}}};
  CHECK(parse_features_csv(emit_features_csv(f)) == f);
  CHECK(parse_features_binary(emit_features_binary(f)) == f);
  CHECK(parse_features_csv("# comment\nid,a,b\nx,1,2\n\ny,3,4\n") ==
        std::vector<FrameFeature>{{"x", {1, 2}}, {"y", {3, 4}}});
  CHECK_THROWS_AS(parse_features_csv("x,1,2\ny,3\n"), ParseError);
  CHECK_THROWS_AS(parse_features_csv("x,1,abc\n"), ParseError);
  CHECK_THROWS_AS(parse_features_binary("PBFEAT01"), ParseError);
  CHECK_THROWS_AS(parse_features_binary("garbage!"), ParseError);

  const auto dir = std::filesystem::temp_directory_path() / "posebench_features_test";
  write_text_file(dir / "f.bin", emit_features_binary(f));
  write_text_file(dir / "f.csv", emit_features_csv(f));
  CHECK(load_features(dir / "f.bin") == f);
  CHECK(load_features(dir / "f.csv") == f);
  std::filesystem::remove_all(dir);
}

TEST_CASE("features: grayscale downsampling") {
  std::vector<std::uint8_t> img(64 * 48);
  for (std::size_t y = 0; y < 48; ++y) {
    for (std::size_t x = 0; x < 64; ++x) img[y * 64 + x] = x < 32 ? 0 : 255;
  }
  const auto v = downsample_grayscale(img, 64, 48);
  REQUIRE(v.size() == kDefaultFeatureWidth * kDefaultFeatureHeight);
  CHECK(v[0] == 0.0);
  CHECK(v[31] == 1.0);
  CHECK(v[15] == 0.0);
  CHECK(v[16] == 1.0);
  const auto tiny = downsample_grayscale(img, 64, 48, 2, 1);
  CHECK(tiny == std::vector<double>{0.0, 1.0});
  CHECK_THROWS_AS(downsample_grayscale(img, 65, 48), DomainError);
}

TEST_CASE("folds: greedy example") {
  const auto f = subject_exclusive_folds({{"A", 4}, {"B", 4}, {"C", 2}, {"D", 2}}, 2);
  CHECK(f.assignment.at("A") == 0);
  CHECK(f.assignment.at("B") == 1);
  CHECK(f.assignment.at("C") == 0);
  CHECK(f.assignment.at("D") == 1);
  CHECK(f.totals == std::vector<std::size_t>{6, 6});
  CHECK(f.subjects == std::vector<std::size_t>{2, 2});
}

TEST_CASE("folds: one subject per fold and errors") {
  const auto f = subject_exclusive_folds({{"a", 5}, {"b", 5}, {"c", 5}}, 3);
  CHECK(f.subjects == std::vector<std::size_t>{1, 1, 1});
  CHECK_THROWS_AS(subject_exclusive_folds({{"a", 5}}, 2), DomainError);
  CHECK_THROWS_AS(subject_exclusive_folds({{"a", 5}}, 0), DomainError);
}

TEST_CASE("folds: greedy balance bound on random cohorts") {
  testing::Gaussian g(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, std::size_t> counts;
    const std::size_t n = 5 + static_cast<std::size_t>(g.uniform() * 40);
    std::size_t biggest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = 1 + static_cast<std::size_t>(g.uniform() * 300);
      counts["s" + std::to_string(i)] = c;
      biggest = std::max(biggest, c);
    }
    const auto f = subject_exclusive_folds(counts, 5);
    CHECK(f.assignment.size() == n);
    const auto [lo, hi] = std::minmax_element(f.totals.begin(), f.totals.end());
    CHECK(*hi - *lo <= biggest);
    CHECK(std::accumulate(f.totals.begin(), f.totals.end(), std::size_t{0}) ==
          std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                          [](std::size_t s, const auto& kv) { return s + kv.second; }));
  }
}

TEST_CASE("folds: validation tagging and JSON") {
  const Dataset d = testing::make_dataset({.frames = 50, .subjects = 10});
  auto f = subject_exclusive_folds(subject_frame_counts(d), 5);
  tag_validation(f, d, 0.1, 4);
  REQUIRE(f.validation.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    const std::size_t training = 50 - f.totals[k];
    CHECK(f.validation[k].size() == static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(training))));
    for (const auto& id : f.validation[k]) {
      const auto i = d.find(id);
      REQUIRE(i.has_value());
      CHECK(f.assignment.at(d.frame(*i).subject) != k);
    }
  }
  auto again = subject_exclusive_folds(subject_frame_counts(d), 5);
  tag_validation(again, d, 0.1, 4);
  CHECK(again.validation == f.validation);

  const auto j = nlohmann::json::parse(to_json(f));
  CHECK(j.at("n_folds") == 5);
  CHECK(j.at("totals").size() == 5);
  CHECK(j.at("assignment").size() == 10);
  CHECK_THROWS_AS(tag_validation(f, d, 1.5, 0), DomainError);
}
