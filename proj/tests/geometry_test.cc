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
#include "plotkit/geometry.h"

#include <random>

#include <gtest/gtest.h>

#include "plotkit/error.h"

namespace plotkit {
namespace {

// Counts unit pixels covered by both / either of two integer boxes.
std::pair<int, int> PixelCounts(const Box& a, const Box& b) {
  int inter = 0, uni = 0;
  for (int y = 0; y < 40; ++y) {
    for (int x = 0; x < 40; ++x) {
      const bool in_a = a.Contains(x + 0.5, y + 0.5);
      const bool in_b = b.Contains(x + 0.5, y + 0.5);
      inter += in_a && in_b;
      uni += in_a || in_b;
    }
  }
  return {inter, uni};
}

TEST(BoxTest, RejectsNegativeExtent) {
  EXPECT_THROW(Box(10, 0, 5, 5), Error);
  EXPECT_THROW(Box(0, 10, 5, 5), Error);
  EXPECT_THROW(Box(0, 0, INFINITY, 5), Error);
  EXPECT_NO_THROW(Box(3, 3, 3, 3));
}

TEST(BoxTest, HalfOpenContainment) {
  const Box b(0, 0, 10, 10);
  EXPECT_TRUE(b.Contains(0, 0));
  EXPECT_TRUE(b.Contains(9.999, 5));
  EXPECT_FALSE(b.Contains(10, 5));
  EXPECT_FALSE(b.Contains(5, 10));
}

TEST(IouTest, Examples) {
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(0, 0, 10, 10)), 1.0);
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(20, 20, 30, 30)), 0.0);
  EXPECT_NEAR(Iou(Box(0, 0, 10, 10), Box(5, 5, 15, 15)), 25.0 / 175.0, 1e-12);
  EXPECT_DOUBLE_EQ(Iou(Box(1, 1, 1, 1), Box(1, 1, 1, 1)), 0.0);
}

TEST(IouTest, MatchesPixelCountOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 39);
  for (int trial = 0; trial < 2000; ++trial) {
    int c[8];
    for (int& v : c) v = coord(rng);
    const Box a(std::min(c[0], c[1]), std::min(c[2], c[3]),
                std::max(c[0], c[1]), std::max(c[2], c[3]));
    const Box b(std::min(c[4], c[5]), std::min(c[6], c[7]),
                std::max(c[4], c[5]), std::max(c[6], c[7]));
    const auto [inter, uni] = PixelCounts(a, b);
    EXPECT_DOUBLE_EQ(IntersectionArea(a, b), inter);
    EXPECT_DOUBLE_EQ(UnionArea(a, b), uni);
    const double expected = uni > 0 ? static_cast<double>(inter) / uni : 0.0;
    EXPECT_NEAR(Iou(a, b), expected, 1e-12);
    EXPECT_DOUBLE_EQ(Iou(a, b), Iou(b, a));
    EXPECT_GE(Iou(a, b), 0.0);
    EXPECT_LE(Iou(a, b), 1.0);
  }
}

TEST(EnclosingTest, Examples) {
  EXPECT_EQ(Enclosing(Box(0, 0, 1, 1), Box(0, 0, 1, 1)), Box(0, 0, 1, 1));
  EXPECT_EQ(Enclosing(Box(0, 0, 10, 10), Box(5, 5, 15, 15)),
            Box(0, 0, 15, 15));
  EXPECT_EQ(Enclosing(Box(0, 0, 1, 1), Box(9, 9, 10, 10)), Box(0, 0, 10, 10));
}

TEST(CenterDistanceTest, Examples) {
  EXPECT_DOUBLE_EQ(CenterDistanceSq(Box(0, 0, 2, 2), Box(0, 0, 2, 2)), 0.0);
  EXPECT_DOUBLE_EQ(CenterDistanceSq(Box(0, 0, 2, 2), Box(4, 0, 6, 2)), 16.0);
  EXPECT_DOUBLE_EQ(CenterDistanceSq(Box(0, 0, 2, 2), Box(0, 4, 2, 6)), 16.0);
}

TEST(OverlapsTest, TouchingBoxesDoNotOverlap) {
  EXPECT_FALSE(Overlaps(Box(0, 0, 10, 10), Box(10, 0, 20, 10)));
  EXPECT_TRUE(Overlaps(Box(0, 0, 10, 10), Box(9, 9, 20, 10)));
}

}  // namespace
}  // namespace plotkit
