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


#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "posebench/dataset.hpp"
#include "posebench/error.hpp"
#include "posebench/occlusion.hpp"
#include "posebench/schema.hpp"

using namespace posebench;

TEST_CASE("schema: canonical order and left/right merging") {
  const auto& names = KeypointSchema::keypoint_names();
  CHECK(names.size() == 17);
  CHECK(names[0] == "nose");
  CHECK(names[5] == "left_shoulder");
  CHECK(names[16] == "right_ankle");
  CHECK(KeypointSchema::group_of(Keypoint::kNose) == Group::kNose);
  CHECK(KeypointSchema::group_of(Keypoint::kLeftEar) == Group::kEar);
  CHECK(KeypointSchema::group_of(Keypoint::kRightEar) == Group::kEar);
  CHECK(KeypointSchema::group_of(Keypoint::kRightAnkle) == Group::kAnkle);
  for (std::size_t g = 0; g < kNumGroups; ++g) {
    const auto members = KeypointSchema::members(static_cast<Group>(g));
    CHECK(members.size() == (g == 0 ? 1u : 2u));
    for (Keypoint k : members) CHECK(KeypointSchema::group_of(k) == static_cast<Group>(g));
  }
  CHECK(KeypointSchema::find_keypoint("left_wrist") == Keypoint::kLeftWrist);
  CHECK_FALSE(KeypointSchema::find_keypoint("tail").has_value());
  CHECK(KeypointSchema::find_group("knee") == Group::kKnee);
}

TEST_CASE("schema: mismatch detection") {
  std::vector<std::string> names(KeypointSchema::keypoint_names().begin(),
                                 KeypointSchema::keypoint_names().end());
  CHECK_FALSE(KeypointSchema::mismatch(names).has_value());
  std::swap(names[1], names[2]);
  CHECK(KeypointSchema::mismatch(names).has_value());
  names.pop_back();
  CHECK(KeypointSchema::mismatch(names).has_value());
}

TEST_CASE("dataset: construction sorts by id and validates") {
  std::vector<FrameEntry> entries = {testing::posed_frame("b", "s1", "top", 10, 100),
                                     testing::posed_frame("a", "s1", "diagonal", 10, 100)};
  Dataset d(entries);
  REQUIRE(d.size() == 2);
  CHECK(d.frame(0).id == "a");
  CHECK(d.find("b") == 1u);
  CHECK_FALSE(d.find("zz").has_value());
  CHECK(d.double_annotated_count() == 0);

  auto dup = entries;
  dup[1].record.id = "b";
  CHECK_THROWS_AS(Dataset{dup}, ValidationError);

  auto bad_dim = entries;
  bad_dim[0].record.width = 0;
  CHECK_THROWS_AS(Dataset{bad_dim}, ValidationError);

  auto bad_age = entries;
  bad_age[0].record.age_days = -1;
  CHECK_THROWS_AS(Dataset{bad_age}, ValidationError);

  CHECK_THROWS_AS(Dataset(entries, 0.0), ValidationError);
}

TEST_CASE("dataset: prediction set validation") {
  Dataset d({testing::posed_frame("a", "s1", "top", 10, 100)});
  CHECK_THROWS_AS(PredictionSet("m", d, {}), ValidationError);
  std::vector<FramePredictions> frames(1);
  frames[0][0] = KeypointPrediction{{1, 2}, 1.5};
  CHECK_THROWS_AS(PredictionSet("m", d, frames), ValidationError);
  frames[0][0] = KeypointPrediction{{1, 2}, 1.0};
  PredictionSet p("m", d, frames);
  CHECK(p.has_confidence());
  frames[0][1] = KeypointPrediction{{1, 2}, std::nullopt};
  CHECK_FALSE(PredictionSet("m", d, frames).has_confidence());
  auto e = PredictionSet::empty_for("none", d);
  CHECK(e.size() == 1);
  CHECK_FALSE(e.frame(0)[0].has_value());
}

TEST_CASE("dataset: frame filter") {
  FrameRecord f{"a", "s1", "T1", View::diagonal(), 30, 10, 10};
  CHECK(FrameFilter::all().matches(f));
  CHECK(FrameFilter::all().view_label() == "all");
  CHECK(FrameFilter::for_view("diagonal").matches(f));
  CHECK_FALSE(FrameFilter::for_view("top").matches(f));
  FrameFilter age;
  age.min_age_days = 30;
  age.max_age_days = 42;
  CHECK(age.matches(f));
  f.age_days = 42;
  CHECK_FALSE(age.matches(f));
  FrameFilter subj;
  subj.subjects = {"s2"};
  CHECK_FALSE(subj.matches(f));
  CHECK(View::parse("side").kind() == View::Kind::kOther);
  CHECK(View::parse("side").label() == "side");
}

TEST_CASE("occlusion: missing rates stratified by age") {
  // Two frames younger than 42 days with both ears missing, three older
  // frames with one ear missing.
  std::vector<FrameEntry> entries;
  for (int i = 0; i < 5; ++i) {
    auto e = testing::posed_frame("f" + std::to_string(i), "s", "top", i < 2 ? 20 : 60, 100);
    e.primary.keypoints[index(Keypoint::kLeftEar)].reset();
    if (i < 2) e.primary.keypoints[index(Keypoint::kRightEar)].reset();
    entries.push_back(e);
  }
  const auto stats = occlusion_stats(Dataset(entries), 42.0);
  const auto& ear = stats.groups[index(Group::kEar)];
  CHECK(ear.overall.missing == 7);
  CHECK(ear.overall.slots == 10);
  CHECK(*ear.overall.rate() == doctest::Approx(0.7));
  CHECK(*ear.younger.rate() == doctest::Approx(1.0));
  CHECK(*ear.older.rate() == doctest::Approx(0.5));
  CHECK(*stats.groups[index(Group::kNose)].overall.rate() == 0.0);
  CHECK(ear.younger.frames == 2);
  CHECK(ear.older.frames == 3);
}

TEST_CASE("occlusion: empty stratum has no rate") {
  Dataset d({testing::posed_frame("a", "s", "top", 80, 100)});
  const auto stats = occlusion_stats(d, 42.0);
  CHECK_FALSE(stats.groups[0].younger.rate().has_value());
  CHECK(stats.groups[0].older.rate() == 0.0);
}
