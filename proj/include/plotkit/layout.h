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
#ifndef PLOTKIT_LAYOUT_H_
#define PLOTKIT_LAYOUT_H_

#include <optional>

#include "plotkit/geometry.h"

namespace plotkit {

// Axis positions and regions of a rendered plot.
struct PlotLayout {
  int x_axis_row = 0;  // pixel row of the horizontal axis line
  int y_axis_col = 0;  // pixel column of the vertical axis line
  // Above the x-axis and right of the y-axis.
  Box plot_area;
  std::optional<Box> legend;
};

}  // namespace plotkit

#endif  // PLOTKIT_LAYOUT_H_
