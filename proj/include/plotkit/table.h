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
#ifndef PLOTKIT_TABLE_H_
#define PLOTKIT_TABLE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plotkit/annotation.h"
#include "plotkit/detection.h"
#include "plotkit/image.h"
#include "plotkit/layout.h"

namespace plotkit {

// Rows are x-tick labels, columns legend labels (or a single "series").
struct PlotTable {
  std::vector<std::string> row_headers;
  std::vector<std::string> col_headers;
  // values[row][col]; absent cells are nullopt.
  std::vector<std::vector<std::optional<double>>> values;

  PlotTable() = default;
  PlotTable(std::vector<std::string> rows, std::vector<std::string> cols);

  size_t CellCount() const;
  friend bool operator==(const PlotTable&, const PlotTable&) = default;
};

inline constexpr const char* kDefaultSeriesName = "series";

// (pixel y, value) pairs ordered by ascending value; both coordinates are
// strictly monotonic.
struct TickScale {
  struct Tick {
    double pixel = 0.0;
    double value = 0.0;
  };
  std::vector<Tick> ticks;
};

// A detected or annotated plot object as seen by the table builder.
struct TableObject {
  ObjectClass cls = ObjectClass::kBackground;
  Box box;
  std::string text;
  Rgb fill;
  double score = 1.0;
};

// Parses a tick label as a number ("1,200" and "45%" are accepted).
std::optional<double> ParseNumber(std::string_view text);

// Uses the y-tick objects among `objects`; the tick position is the vertical
// centre of the label box. Non-numeric labels are skipped.
// Throws Error(kInsufficientTicks) for fewer than two numeric ticks and
// Error(kNonMonotonicScale) when pixel order disagrees with value order.
TickScale BuildScale(std::span<const TableObject> objects);

// Linear interpolation between the bracketing ticks; linear extrapolation
// from the nearest pair outside the tick range.
double InterpolateValue(double pixel_y, const TickScale& scale);

// Rows from x-ticks (left to right), columns from legend labels (top to
// bottom). Each bar or dot goes to the nearest x-tick horizontally and to the
// series whose legend preview colour is closest. Bars are read at their top
// edge, dots at their centre.
// Throws Error(kInsufficientTicks) or Error(kNoDataObjects).
PlotTable BuildTable(std::span<const TableObject> objects,
                     const PlotLayout& layout);

// Mean colour of the non-background pixels inside box (background colour if
// there are none).
Rgb MeanFill(const RasterImage& image, const Box& box, Rgb background);

// Ground-truth objects with their fill colour read from the image.
std::vector<TableObject> ObjectsFromAnnotations(
    std::span<const Annotation> annotations, const RasterImage& image);

// Supplies the text of a detected text object.
class TextSource {
 public:
  virtual ~TextSource() = default;
  virtual std::optional<std::string> TextFor(const Detection& detection) const = 0;
};

// Reads text from ground-truth annotations: the textual object with the
// highest IOU (at least min_iou) against the detection.
class AnnotationTextSource : public TextSource {
 public:
  explicit AnnotationTextSource(std::vector<Annotation> annotations,
                                double min_iou = 0.5);
  std::optional<std::string> TextFor(const Detection& detection) const override;

 private:
  std::vector<Annotation> annotations_;
  double min_iou_;
};

// Detections with text from `text` (textual classes without text are
// dropped) and fill colour read from the image.
std::vector<TableObject> ObjectsFromDetections(
    std::span<const Detection> detections, const RasterImage& image,
    const TextSource& text);

}  // namespace plotkit

#endif  // PLOTKIT_TABLE_H_
