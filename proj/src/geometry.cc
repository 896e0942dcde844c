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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plotkit/error.h"

namespace plotkit {

Box::Box(double x0, double y0, double x1, double y1)
    : x0_(x0), y0_(y0), x1_(x1), y1_(y1) {
  if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(x1) ||
      !std::isfinite(y1)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite box coordinate");
  }
  if (x1 < x0 || y1 < y0) {
    throw Error(ErrorCode::kInvalidArgument,
                "negative box extent " + ToString());
  }
}

std::string Box::ToString() const {
  std::ostringstream os;
  os << "(" << x0_ << ", " << y0_ << ", " << x1_ << ", " << y1_ << ")";
  return os.str();
}

double IntersectionArea(const Box& a, const Box& b) {
  const double w = std::min(a.x1(), b.x1()) - std::max(a.x0(), b.x0());
  const double h = std::min(a.y1(), b.y1()) - std::max(a.y0(), b.y0());
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

double UnionArea(const Box& a, const Box& b) {
  return a.area() + b.area() - IntersectionArea(a, b);
}

double Iou(const Box& a, const Box& b) {
  const double total = UnionArea(a, b);
  if (total <= 0.0) return 0.0;
  return IntersectionArea(a, b) / total;
}

Box Enclosing(const Box& a, const Box& b) {
  return Box(std::min(a.x0(), b.x0()), std::min(a.y0(), b.y0()),
             std::max(a.x1(), b.x1()), std::max(a.y1(), b.y1()));
}

double CenterDistanceSq(const Box& a, const Box& b) {
  const double dx = a.center_x() - b.center_x();
  const double dy = a.center_y() - b.center_y();
  return dx * dx + dy * dy;
}

bool Overlaps(const Box& a, const Box& b) {
  return IntersectionArea(a, b) > 0.0;
}

}  // namespace plotkit
