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
#ifndef PLOTKIT_CONTOURS_H_
#define PLOTKIT_CONTOURS_H_

#include <vector>

#include "plotkit/edges.h"

namespace plotkit {

struct PixelPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

// Outer boundary of one 8-connected edge component, in tracing order.
// Consecutive points are 8-adjacent.
struct Contour {
  int id = 0;
  std::vector<PixelPoint> points;
};

// One contour per 8-connected component of set pixels, traced with
// Suzuki-Abe outer border following. Contours are ordered by the raster
// position (top-to-bottom, left-to-right) of each component's first pixel
// and numbered 0, 1, ... in that order.
std::vector<Contour> TraceContours(const EdgeMap& edges);

}  // namespace plotkit

#endif  // PLOTKIT_CONTOURS_H_
