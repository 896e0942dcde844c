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
#include "plotkit/proposals.h"

#include <gtest/gtest.h>

#include "plotkit/synth.h"

namespace plotkit {
namespace {

RasterImage SquareOnBlack() {
  RasterImage img(60, 60, kBlack);
  img.FillRect(20, 20, 30, 30, kWhite);
  return img;
}

TEST(ProposeRegionsTest, WhiteSquare) {
  const auto props = ProposeRegions(SquareOnBlack());
  ASSERT_EQ(props.size(), 1u);
  const Box& b = props[0].box;
  // The edge ring reaches one pixel outside the square.
  EXPECT_EQ(b, Box(19, 19, 31, 31));
}

TEST(ProposeRegionsTest, BlankImage) {
  EXPECT_TRUE(ProposeRegions(RasterImage(100, 80, kWhite)).empty());
}

TEST(ProposeRegionsTest, MinSideFilter) {
  RasterImage img(60, 60, kWhite);
  img.set(10, 10, kBlack);  // ring box 3x3
  img.FillRect(30, 30, 40, 40, kBlack);
  ProposalConfig cfg;
  EXPECT_EQ(ProposeRegions(img, cfg).size(), 2u);
  cfg.min_side_px = 4;
  const auto props = ProposeRegions(img, cfg);
  ASSERT_EQ(props.size(), 1u);
  EXPECT_EQ(props[0].box, Box(29, 29, 41, 41));
}

TEST(ProposeRegionsTest, CapKeepsLargest) {
  RasterImage img(200, 40, kWhite);
  for (int i = 0; i < 10; ++i) {
    img.FillRect(5 + i * 19, 5, 5 + i * 19 + 4 + i, 5 + 4 + i, kBlack);
  }
  ProposalConfig cfg;
  cfg.max_proposals = 3;
  const auto props = ProposeRegions(img, cfg);
  ASSERT_EQ(props.size(), 3u);
  EXPECT_GE(props[0].box.area(), props[1].box.area());
  EXPECT_GE(props[1].box.area(), props[2].box.area());
  EXPECT_EQ(props[0].box.width(), 4 + 9 + 2);
}

TEST(ProposeRegionsTest, BatchMatchesSerialAndIsDeterministic) {
  std::vector<RasterImage> images;
  for (int i = 0; i < 6; ++i) {
    images.push_back(GeneratePlot(CorpusSpec(5, i)).image);
  }
  const auto serial = ProposeRegionsBatchSerial(images, {});
  EXPECT_EQ(ProposeRegionsBatch(images, {}, 1), serial);
  EXPECT_EQ(ProposeRegionsBatch(images, {}, 4), serial);
  for (size_t i = 0; i < images.size(); ++i) {
    EXPECT_EQ(ProposeRegions(images[i]), serial[i]);
    EXPECT_LE(serial[i].size(), 500u);
  }
}

TEST(ProposeRegionsTest, GeneratedBarPlotRecall) {
  const GeneratedPlot plot = GeneratePlot(CorpusSpec(1, 0));
  const auto props = ProposeRegions(plot.image);
  for (const Annotation& a : plot.annotations) {
    double best = 0.0;
    for (const Proposal& p : props) best = std::max(best, Iou(p.box, a.box));
    EXPECT_GE(best, 0.5) << ClassName(a.cls) << " " << a.box.ToString();
  }
}

}  // namespace
}  // namespace plotkit
