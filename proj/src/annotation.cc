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
#include "plotkit/annotation.h"

namespace plotkit {

std::string_view ClassName(ObjectClass cls) {
  switch (cls) {
    case ObjectClass::kBar: return "bar";
    case ObjectClass::kDotLine: return "dot_line";
    case ObjectClass::kLegendLabel: return "legend_label";
    case ObjectClass::kLegendPreview: return "legend_preview";
    case ObjectClass::kPlotTitle: return "plot_title";
    case ObjectClass::kXAxisLabel: return "x_axis_label";
    case ObjectClass::kXAxisTicks: return "x_axis_ticks";
    case ObjectClass::kYAxisLabel: return "y_axis_label";
    case ObjectClass::kYAxisTicks: return "y_axis_ticks";
    case ObjectClass::kBackground: return "background";
  }
  return "background";
}

std::optional<ObjectClass> ParseClassName(std::string_view name) {
  for (ObjectClass c : kObjectClasses) {
    if (ClassName(c) == name) return c;
  }
  if (name == "background") return ObjectClass::kBackground;
  return std::nullopt;
}

bool IsTextual(ObjectClass cls) {
  switch (cls) {
    case ObjectClass::kLegendLabel:
    case ObjectClass::kPlotTitle:
    case ObjectClass::kXAxisLabel:
    case ObjectClass::kXAxisTicks:
    case ObjectClass::kYAxisLabel:
    case ObjectClass::kYAxisTicks:
      return true;
    default:
      return false;
  }
}

}  // namespace plotkit
