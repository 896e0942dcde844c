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

#include <algorithm>
#include <cmath>

#include "plotkit/error.h"

namespace plotkit {
namespace {

void CheckThreshold(int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw Error(ErrorCode::kInvalidArgument, "edge threshold must be 0..255");
  }
}

inline float GrayAt(const uint8_t* px) {
  return 0.299f * px[0] + 0.587f * px[1] + 0.114f * px[2];
}

// Computes edge row y from the grayscale plane.
inline void EdgeRow(const std::vector<float>& gray, int w, int h, int y,
                    float threshold, uint8_t* out) {
  const float* up = gray.data() + static_cast<size_t>(std::max(y - 1, 0)) * w;
  const float* mid = gray.data() + static_cast<size_t>(y) * w;
  const float* down =
      gray.data() + static_cast<size_t>(std::min(y + 1, h - 1)) * w;
  for (int x = 0; x < w; ++x) {
    const float left = mid[std::max(x - 1, 0)];
    const float right = mid[std::min(x + 1, w - 1)];
    const float response = up[x] + down[x] + left + right - 4.0f * mid[x];
    out[x] = std::fabs(response) >= threshold ? 1 : 0;
  }
}

}  // namespace

size_t EdgeMap::CountSet() const {
  return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

EdgeMap LaplacianEdges(const RasterImage& image, int threshold) {
  CheckThreshold(threshold);
  const int w = image.width(), h = image.height();
  const uint8_t* px = image.pixels().data();
  std::vector<float> gray(static_cast<size_t>(w) * h);
  const long n = static_cast<long>(gray.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) gray[i] = GrayAt(px + 3 * i);

  EdgeMap edges(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    EdgeRow(gray, w, h, y, static_cast<float>(threshold), edges.row(y));
  }
  return edges;
}

EdgeMap LaplacianEdgesSerial(const RasterImage& image, int threshold) {
  CheckThreshold(threshold);
  const int w = image.width(), h = image.height();
  const uint8_t* px = image.pixels().data();
  std::vector<float> gray(static_cast<size_t>(w) * h);
  for (size_t i = 0; i < gray.size(); ++i) gray[i] = GrayAt(px + 3 * i);
  EdgeMap edges(w, h);
  for (int y = 0; y < h; ++y) {
    EdgeRow(gray, w, h, y, static_cast<float>(threshold), edges.row(y));
  }
  return edges;
}

}  // namespace plotkit
