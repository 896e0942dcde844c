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
#ifndef PLOTKIT_ANNOTATION_H_
#define PLOTKIT_ANNOTATION_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plotkit/geometry.h"

namespace plotkit {

// The nine plot object classes plus background.
enum class ObjectClass {
  kBar = 0,
  kDotLine,
  kLegendLabel,
  kLegendPreview,
  kPlotTitle,
  kXAxisLabel,
  kXAxisTicks,
  kYAxisLabel,
  kYAxisTicks,
  kBackground,
};

inline constexpr int kNumObjectClasses = 9;

inline constexpr std::array<ObjectClass, kNumObjectClasses> kObjectClasses = {
    ObjectClass::kBar,        ObjectClass::kDotLine,
    ObjectClass::kLegendLabel, ObjectClass::kLegendPreview,
    ObjectClass::kPlotTitle,  ObjectClass::kXAxisLabel,
    ObjectClass::kXAxisTicks, ObjectClass::kYAxisLabel,
    ObjectClass::kYAxisTicks};

// Stable snake_case names used in every JSON file.
std::string_view ClassName(ObjectClass cls);
std::optional<ObjectClass> ParseClassName(std::string_view name);

// Text-bearing classes; the remaining non-background classes are visual.
bool IsTextual(ObjectClass cls);

// A ground-truth object. `words` holds the ink box of each word for textual
// objects rendered by the generator (may be empty).
struct Annotation {
  int object_id = 0;
  ObjectClass cls = ObjectClass::kBar;
  Box box;
  std::optional<std::string> text;
  std::vector<Box> words;
};

}  // namespace plotkit

#endif  // PLOTKIT_ANNOTATION_H_
