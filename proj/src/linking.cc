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
#include "plotkit/linking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "plotkit/error.h"

namespace plotkit {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    // Smaller root wins so the representative is the minimum member.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

double AxisGap(double a0, double a1, double b0, double b1) {
  return std::max({0.0, b0 - a1, a0 - b1});
}

}  // namespace

Direction Opposite(Direction d) {
  switch (d) {
    case Direction::kLeft: return Direction::kRight;
    case Direction::kRight: return Direction::kLeft;
    case Direction::kTop: return Direction::kBottom;
    case Direction::kBottom: return Direction::kTop;
  }
  return d;
}

const char* DirectionName(Direction d) {
  switch (d) {
    case Direction::kLeft: return "left";
    case Direction::kRight: return "right";
    case Direction::kTop: return "top";
    case Direction::kBottom: return "bottom";
  }
  return "?";
}

NeighborIndex FindNeighbors(std::span<const Box> boxes, double window_px) {
  if (!(window_px > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "window_px must be > 0");
  }
  const double margin = 0.5 * window_px;
  const int n = static_cast<int>(boxes.size());
  NeighborIndex index(boxes.size());
  for (int i = 0; i < n; ++i) {
    const Box& a = boxes[i];
    std::array<double, 4> best_dist;
    best_dist.fill(INFINITY);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Box& b = boxes[j];
      if (AxisGap(a.x0(), a.x1(), b.x0(), b.x1()) > margin ||
          AxisGap(a.y0(), a.y1(), b.y0(), b.y1()) > margin) {
        continue;
      }
      const double dx = b.center_x() - a.center_x();
      const double dy = b.center_y() - a.center_y();
      if (dx == 0.0 && dy == 0.0) continue;
      Direction dir;
      if (std::abs(dx) >= std::abs(dy)) {
        dir = dx > 0 ? Direction::kRight : Direction::kLeft;
      } else {
        dir = dy > 0 ? Direction::kBottom : Direction::kTop;
      }
      const double dist = dx * dx + dy * dy;
      const int k = static_cast<int>(dir);
      // Strict comparison keeps the lower id on ties.
      if (dist < best_dist[k]) {
        best_dist[k] = dist;
        index[i][dir] = j;
      }
    }
  }
  return index;
}

std::vector<std::vector<int>> LinkComponents(std::span<const Box> boxes,
                                             std::span<const LinkVector> links,
                                             const NeighborIndex& neighbors) {
  if (links.size() != boxes.size() || neighbors.size() != boxes.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "boxes, links and neighbors must have equal length");
  }
  const int n = static_cast<int>(boxes.size());
  DisjointSets sets(boxes.size());
  for (int i = 0; i < n; ++i) {
    for (Direction d : kAllDirections) {
      if (links[i][d] && neighbors[i][d].has_value()) {
        const int j = *neighbors[i][d];
        if (j >= 0 && j < n) sets.Union(i, j);
      }
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(boxes.size(), -1);
  for (int i = 0; i < n; ++i) {
    const int root = sets.Find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

std::vector<Box> MergeLinked(std::span<const Box> boxes,
                             std::span<const LinkVector> links,
                             const NeighborIndex& neighbors) {
  std::vector<Box> merged;
  for (const auto& group : LinkComponents(boxes, links, neighbors)) {
    Box box = boxes[group.front()];
    for (int id : group) box = Enclosing(box, boxes[id]);
    merged.push_back(box);
  }
  return merged;
}

}  // namespace plotkit
