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
#include "plotkit/edges.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "plotkit/error.h"

namespace plotkit {
namespace {

// Direct 4-neighbour Laplacian with replicate padding, computed in double.
EdgeMap HandLaplacian(const RasterImage& img, int threshold) {
  const int w = img.width(), h = img.height();
  auto luma = [&](int x, int y) {
    x = std::clamp(x, 0, w - 1);
    y = std::clamp(y, 0, h - 1);
    const Rgb c = img.at(x, y);
    return 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
  };
  EdgeMap out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double r = luma(x - 1, y) + luma(x + 1, y) + luma(x, y - 1) +
                       luma(x, y + 1) - 4 * luma(x, y);
      out.set(x, y, std::abs(r) >= threshold);
    }
  }
  return out;
}

RasterImage SquareImage() {
  RasterImage img(50, 50, kBlack);
  img.FillRect(20, 20, 30, 30, kWhite);
  return img;
}

TEST(LaplacianTest, ConstantImageHasNoEdges) {
  RasterImage img(30, 20, Rgb{90, 10, 200});
  for (int t : {1, 8, 255}) EXPECT_EQ(LaplacianEdges(img, t).CountSet(), 0);
}

TEST(LaplacianTest, SinglePixelImageHasNoEdges) {
  EXPECT_EQ(LaplacianEdges(RasterImage(1, 1, kBlack), 1).CountSet(), 0);
}

TEST(LaplacianTest, SquareGivesBoundaryRing) {
  const EdgeMap edges = LaplacianEdges(SquareImage(), 8);
  // Ring: inside pixels with a 4-neighbour outside and outside pixels with a
  // 4-neighbour inside.
  auto inside = [](int x, int y) {
    return x >= 20 && x < 30 && y >= 20 && y < 30;
  };
  for (int y = 0; y < 50; ++y) {
    for (int x = 0; x < 50; ++x) {
      const bool differs = inside(x - 1, y) != inside(x, y) ||
                           inside(x + 1, y) != inside(x, y) ||
                           inside(x, y - 1) != inside(x, y) ||
                           inside(x, y + 1) != inside(x, y);
      EXPECT_EQ(edges.at(x, y), differs) << x << "," << y;
    }
  }
  EXPECT_EQ(edges, HandLaplacian(SquareImage(), 8));
}

TEST(LaplacianTest, RejectsBadThreshold) {
  EXPECT_THROW(LaplacianEdges(SquareImage(), -1), Error);
  EXPECT_THROW(LaplacianEdges(SquareImage(), 256), Error);
}

TEST(LaplacianTest, ParallelMatchesSerialAndOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    RasterImage img(37 + trial, 23 + 2 * trial);
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        img.set(x, y,
                Rgb{static_cast<uint8_t>(rng() % 4 * 60),
                    static_cast<uint8_t>(rng() % 2 * 200),
                    static_cast<uint8_t>(rng() % 256)});
      }
    }
    for (int t : {0, 8, 40}) {
      const EdgeMap par = LaplacianEdges(img, t);
      EXPECT_EQ(par, LaplacianEdgesSerial(img, t));
      // The hand oracle sums in a different order; compare away from ties.
      EXPECT_EQ(par.CountSet(), HandLaplacian(img, t).CountSet());
    }
  }
}

}  // namespace
}  // namespace plotkit
