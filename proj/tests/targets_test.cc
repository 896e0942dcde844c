// Copyright 2026 The PlotKit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "plotkit/targets.h"

#include <gtest/gtest.h>

#include "plotkit/error.h"

namespace plotkit {
namespace {

Annotation Make(int id, ObjectClass cls, Box box) {
  Annotation a;
  a.object_id = id;
  a.cls = cls;
  a.box = box;
  return a;
}

TEST(AssignClassTest, CenterInsideBar) {
  const std::vector<Annotation> anns = {
      Make(7, ObjectClass::kBar, Box(100, 50, 140, 300))};
  const ClassAssignment c = AssignClass(Box(99, 49, 141, 301), anns);
  EXPECT_EQ(c.cls, ObjectClass::kBar);
  EXPECT_EQ(c.parent_id, 7);
}

TEST(AssignClassTest, WhitespaceIsBackground) {
  const std::vector<Annotation> anns = {
      Make(1, ObjectClass::kBar, Box(100, 50, 140, 300))};
  const ClassAssignment c = AssignClass(Box(0, 0, 10, 10), anns);
  EXPECT_EQ(c.cls, ObjectClass::kBackground);
  EXPECT_FALSE(c.parent_id.has_value());
}

TEST(AssignClassTest, CenterOnEdgeUsesHalfOpenExtent) {
  const std::vector<Annotation> anns = {
      Make(1, ObjectClass::kBar, Box(10, 10, 20, 20))};
  // Center (10, 15): on the closed left edge -> inside.
  EXPECT_EQ(AssignClass(Box(8, 13, 12, 17), anns).cls, ObjectClass::kBar);
  // Center (20, 15): on the open right edge -> outside.
  EXPECT_EQ(AssignClass(Box(18, 13, 22, 17), anns).cls,
            ObjectClass::kBackground);
}

TEST(AssignClassTest, OverlappingAnnotationsRejected) {
  const std::vector<Annotation> anns = {
      Make(1, ObjectClass::kBar, Box(0, 0, 10, 10)),
      Make(2, ObjectClass::kBar, Box(5, 5, 15, 15))};
  try {
    AssignClass(Box(0, 0, 1, 1), anns);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverlappingAnnotations);
  }
}

TEST(RegressionTargetTest, VisualPassThrough) {
  const Annotation bar = Make(1, ObjectClass::kBar, Box(100, 50, 140, 300));
  EXPECT_EQ(AssignRegressionTarget(Box(105, 60, 130, 200), bar),
            Box(100, 50, 140, 300));
}

TEST(RegressionTargetTest, TitleWordIsGrownVertically) {
  const Annotation title =
      Make(1, ObjectClass::kPlotTitle, Box(50, 10, 600, 40));
  EXPECT_EQ(AssignRegressionTarget(Box(200, 15, 260, 35), title),
            Box(200, 10, 260, 40));
}

TEST(RegressionTargetTest, MatchingTickIsIdentity) {
  const Annotation tick = Make(1, ObjectClass::kXAxisTicks, Box(80, 600, 110, 607));
  EXPECT_EQ(AssignRegressionTarget(tick.box, tick), tick.box);
}

TEST(RegressionTargetTest, RotatedLabelIsGrownHorizontally) {
  const Annotation label =
      Make(1, ObjectClass::kYAxisLabel, Box(12, 200, 19, 300));
  EXPECT_EQ(AssignRegressionTarget(Box(13, 220, 18, 250), label),
            Box(12, 220, 19, 250));
}

TEST(LinkTargetsTest, AdjacentWordsOfOneTitle) {
  const std::vector<Box> props = {Box(100, 10, 140, 24), Box(142, 10, 170, 24)};
  const std::vector<std::optional<int>> parents = {3, 3};
  const auto links = AssignLinkTargets(props, parents, FindNeighbors(props, 50));
  EXPECT_TRUE(links[0][Direction::kRight]);
  EXPECT_TRUE(links[1][Direction::kLeft]);
  EXPECT_FALSE(links[0][Direction::kLeft]);
}

TEST(LinkTargetsTest, DifferentParentsOrBackground) {
  const std::vector<Box> props = {Box(100, 10, 140, 24), Box(142, 10, 170, 24),
                                  Box(172, 10, 190, 24)};
  const std::vector<std::optional<int>> parents = {3, 4, std::nullopt};
  const auto links = AssignLinkTargets(props, parents, FindNeighbors(props, 50));
  for (const auto& l : links) EXPECT_FALSE(l.any());
}

TEST(AssignTargetsTest, EndToEnd) {
  const std::vector<Annotation> anns = {
      Make(0, ObjectClass::kPlotTitle, Box(50, 10, 600, 40)),
      Make(1, ObjectClass::kBar, Box(100, 100, 140, 300))};
  const std::vector<Box> props = {Box(200, 15, 260, 35), Box(262, 15, 300, 35),
                                  Box(99, 99, 141, 301), Box(400, 400, 410, 410)};
  const auto t = AssignTargets(props, anns);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0].cls, ObjectClass::kPlotTitle);
  EXPECT_EQ(*t[0].regression_box, Box(200, 10, 260, 40));
  EXPECT_TRUE(t[0].links[Direction::kRight]);
  EXPECT_TRUE(t[1].links[Direction::kLeft]);
  EXPECT_EQ(*t[2].regression_box, Box(100, 100, 140, 300));
  EXPECT_EQ(t[3].cls, ObjectClass::kBackground);
  EXPECT_FALSE(t[3].regression_box.has_value());
  EXPECT_FALSE(t[3].links.any());
}

}  // namespace
}  // namespace plotkit
