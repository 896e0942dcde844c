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
#ifndef PLOTKIT_GEOMETRY_H_
#define PLOTKIT_GEOMETRY_H_

#include <string>

namespace plotkit {

// Axis-aligned rectangle in pixel coordinates, origin top-left. The box is
// half-open: [x0, x1) x [y0, y1). Pixel-grid boxes therefore have integer
// areas and a single pixel (c, r) is Box(c, r, c + 1, r + 1).
class Box {
 public:
  Box() = default;
  // Throws Error(kInvalidArgument) when x1 < x0 or y1 < y0 or a coordinate
  // is not finite.
  Box(double x0, double y0, double x1, double y1);

  double x0() const { return x0_; }
  double y0() const { return y0_; }
  double x1() const { return x1_; }
  double y1() const { return y1_; }

  double width() const { return x1_ - x0_; }
  double height() const { return y1_ - y0_; }
  double area() const { return width() * height(); }
  double center_x() const { return 0.5 * (x0_ + x1_); }
  double center_y() const { return 0.5 * (y0_ + y1_); }

  // Half-open point containment.
  bool Contains(double x, double y) const {
    return x >= x0_ && x < x1_ && y >= y0_ && y < y1_;
  }
  bool Contains(const Box& other) const {
    return other.x0_ >= x0_ && other.x1_ <= x1_ && other.y0_ >= y0_ &&
           other.y1_ <= y1_;
  }

  Box Translated(double dx, double dy) const {
    return Box(x0_ + dx, y0_ + dy, x1_ + dx, y1_ + dy);
  }

  std::string ToString() const;

  friend bool operator==(const Box& a, const Box& b) = default;

 private:
  double x0_ = 0.0;
  double y0_ = 0.0;
  double x1_ = 0.0;
  double y1_ = 0.0;
};

double IntersectionArea(const Box& a, const Box& b);
double UnionArea(const Box& a, const Box& b);

// |a ∩ b| / |a ∪ b|, or 0 when the union is empty.
double Iou(const Box& a, const Box& b);

// Smallest box containing both.
Box Enclosing(const Box& a, const Box& b);

double CenterDistanceSq(const Box& a, const Box& b);

// True when the interiors overlap (shared edges do not count).
bool Overlaps(const Box& a, const Box& b);

}  // namespace plotkit

#endif  // PLOTKIT_GEOMETRY_H_
