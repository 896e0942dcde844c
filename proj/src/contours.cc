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
#include "plotkit/contours.h"

#include <array>
#include <cstdint>

namespace plotkit {
namespace {

// Clockwise with y pointing down: E, SE, S, SW, W, NW, N, NE.
constexpr std::array<int, 8> kDx = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr std::array<int, 8> kDy = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kWest = 4;

int DirectionTo(PixelPoint from, PixelPoint to) {
  for (int d = 0; d < 8; ++d) {
    if (from.x + kDx[d] == to.x && from.y + kDy[d] == to.y) return d;
  }
  return -1;
}

// `start` must be the first pixel of its component in raster order, so its
// west neighbour is background.
std::vector<PixelPoint> FollowOuterBorder(const EdgeMap& edges,
                                          PixelPoint start) {
  auto set_at = [&](PixelPoint p, int d) {
    return edges.get(p.x + kDx[d], p.y + kDy[d]);
  };
  int first_dir = -1;
  for (int k = 0; k < 8; ++k) {
    const int d = (kWest + k) % 8;
    if (set_at(start, d)) {
      first_dir = d;
      break;
    }
  }
  if (first_dir < 0) return {start};

  const PixelPoint first{start.x + kDx[first_dir], start.y + kDy[first_dir]};
  std::vector<PixelPoint> points;
  PixelPoint prev = first;
  PixelPoint cur = start;
  // Each boundary pixel is visited a bounded number of times.
  const size_t limit = 4 * static_cast<size_t>(edges.width()) * edges.height();
  while (points.size() <= limit) {
    const int back = DirectionTo(cur, prev);
    PixelPoint next = prev;
    for (int k = 1; k <= 8; ++k) {
      const int d = ((back - k) % 8 + 8) % 8;  // counterclockwise
      if (set_at(cur, d)) {
        next = {cur.x + kDx[d], cur.y + kDy[d]};
        break;
      }
    }
    points.push_back(cur);
    if (next == start && cur == first) break;
    prev = cur;
    cur = next;
  }
  return points;
}

void LabelComponent(const EdgeMap& edges, PixelPoint seed,
                    std::vector<uint8_t>& visited,
                    std::vector<PixelPoint>& stack) {
  const int w = edges.width();
  stack.clear();
  stack.push_back(seed);
  visited[static_cast<size_t>(seed.y) * w + seed.x] = 1;
  while (!stack.empty()) {
    const PixelPoint p = stack.back();
    stack.pop_back();
    for (int d = 0; d < 8; ++d) {
      const int nx = p.x + kDx[d], ny = p.y + kDy[d];
      if (!edges.get(nx, ny)) continue;
      uint8_t& v = visited[static_cast<size_t>(ny) * w + nx];
      if (v) continue;
      v = 1;
      stack.push_back({nx, ny});
    }
  }
}

}  // namespace

std::vector<Contour> TraceContours(const EdgeMap& edges) {
  std::vector<Contour> contours;
  std::vector<uint8_t> visited(
      static_cast<size_t>(edges.width()) * edges.height(), 0);
  std::vector<PixelPoint> stack;
  for (int y = 0; y < edges.height(); ++y) {
    for (int x = 0; x < edges.width(); ++x) {
      if (!edges.at(x, y) ||
          visited[static_cast<size_t>(y) * edges.width() + x]) {
        continue;
      }
      Contour c;
      c.id = static_cast<int>(contours.size());
      c.points = FollowOuterBorder(edges, {x, y});
      contours.push_back(std::move(c));
      LabelComponent(edges, {x, y}, visited, stack);
    }
  }
  return contours;
}

}  // namespace plotkit
