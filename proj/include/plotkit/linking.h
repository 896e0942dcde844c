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
#ifndef PLOTKIT_LINKING_H_
#define PLOTKIT_LINKING_H_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "plotkit/geometry.h"

namespace plotkit {

enum class Direction { kLeft = 0, kRight = 1, kTop = 2, kBottom = 3 };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::kLeft, Direction::kRight, Direction::kTop, Direction::kBottom};

Direction Opposite(Direction d);
const char* DirectionName(Direction d);

// Whether a proposal should be joined with its neighbour on each side.
struct LinkVector {
  std::array<bool, 4> bits = {false, false, false, false};

  bool operator[](Direction d) const { return bits[static_cast<int>(d)]; }
  bool& operator[](Direction d) { return bits[static_cast<int>(d)]; }
  bool any() const { return bits[0] || bits[1] || bits[2] || bits[3]; }

  friend bool operator==(const LinkVector&, const LinkVector&) = default;
};

struct Neighbors {
  std::array<std::optional<int>, 4> ids;

  const std::optional<int>& operator[](Direction d) const {
    return ids[static_cast<int>(d)];
  }
  std::optional<int>& operator[](Direction d) {
    return ids[static_cast<int>(d)];
  }
};

using NeighborIndex = std::vector<Neighbors>;

inline constexpr double kDefaultLinkWindowPx = 50.0;

// For every box i, the nearest box per direction among the candidates j != i
// whose box touches the search window: i's box grown by window_px / 2 on each
// side. The side of j is the dominant axis of the centre-to-centre vector
// (|dx| >= |dy| gives left/right). Nearest by centre distance, ties to the
// lower id. Boxes sharing i's centre have no direction and are skipped.
NeighborIndex FindNeighbors(std::span<const Box> boxes,
                            double window_px = kDefaultLinkWindowPx);

// Connected components of the link graph: an undirected edge (i, j) exists
// when i links toward j or j links toward i through `neighbors`. Members are
// ascending; components are ordered by their smallest member.
// Throws Error(kLengthMismatch) when the three inputs differ in length.
std::vector<std::vector<int>> LinkComponents(std::span<const Box> boxes,
                                             std::span<const LinkVector> links,
                                             const NeighborIndex& neighbors);

// One enclosing box per component of LinkComponents.
std::vector<Box> MergeLinked(std::span<const Box> boxes,
                             std::span<const LinkVector> links,
                             const NeighborIndex& neighbors);

}  // namespace plotkit

#endif  // PLOTKIT_LINKING_H_
