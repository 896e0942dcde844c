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
#include "plotkit/table.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "plotkit/error.h"

namespace plotkit {

PlotTable::PlotTable(std::vector<std::string> rows,
                     std::vector<std::string> cols)
    : row_headers(std::move(rows)), col_headers(std::move(cols)) {
  values.assign(row_headers.size(),
                std::vector<std::optional<double>>(col_headers.size()));
}

size_t PlotTable::CellCount() const {
  size_t n = 0;
  for (const auto& row : values) {
    for (const auto& v : row) n += v.has_value() ? 1 : 0;
  }
  return n;
}

std::optional<double> ParseNumber(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '%' || c == '$') continue;
    cleaned.push_back(c);
  }
  if (cleaned.empty()) return std::nullopt;
  double value = 0.0;
  const char* end = cleaned.data() + cleaned.size();
  const auto [ptr, ec] = std::from_chars(cleaned.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

TickScale BuildScale(std::span<const TableObject> objects) {
  TickScale scale;
  for (const TableObject& o : objects) {
    if (o.cls != ObjectClass::kYAxisTicks) continue;
    if (auto v = ParseNumber(o.text)) {
      scale.ticks.push_back({o.box.center_y(), *v});
    }
  }
  if (scale.ticks.size() < 2) {
    throw Error(ErrorCode::kInsufficientTicks,
                "need at least two numeric y-ticks, got " +
                    std::to_string(scale.ticks.size()));
  }
  std::stable_sort(scale.ticks.begin(), scale.ticks.end(),
                   [](const auto& a, const auto& b) { return a.value < b.value; });
  const auto& t = scale.ticks;
  const bool decreasing = t[1].pixel < t[0].pixel;
  for (size_t i = 1; i < t.size(); ++i) {
    const bool value_ok = t[i].value > t[i - 1].value;
    const bool pixel_ok = decreasing ? t[i].pixel < t[i - 1].pixel
                                     : t[i].pixel > t[i - 1].pixel;
    if (!value_ok || !pixel_ok) {
      throw Error(ErrorCode::kNonMonotonicScale,
                  "tick values and positions are not strictly monotonic");
    }
  }
  return scale;
}

double InterpolateValue(double pixel_y, const TickScale& scale) {
  const auto& t = scale.ticks;
  if (t.size() < 2) {
    throw Error(ErrorCode::kInsufficientTicks, "scale has fewer than 2 ticks");
  }
  // Pixel positions are monotonic; find the segment containing pixel_y or
  // the end segment nearest to it.
  const bool decreasing = t[1].pixel < t[0].pixel;
  size_t seg = 0;
  for (size_t i = 0; i + 1 < t.size(); ++i) {
    seg = i;
    const bool beyond = decreasing ? pixel_y < t[i + 1].pixel
                                   : pixel_y > t[i + 1].pixel;
    if (!beyond) break;
  }
  const auto& a = t[seg];
  const auto& b = t[seg + 1];
  return a.value + (pixel_y - a.pixel) / (b.pixel - a.pixel) *
                       (b.value - a.value);
}

namespace {

double ColorDistanceSq(Rgb a, Rgb b) {
  const double dr = static_cast<double>(a.r) - b.r;
  const double dg = static_cast<double>(a.g) - b.g;
  const double db = static_cast<double>(a.b) - b.b;
  return dr * dr + dg * dg + db * db;
}

std::vector<const TableObject*> OfClass(std::span<const TableObject> objects,
                                        ObjectClass cls) {
  std::vector<const TableObject*> out;
  for (const TableObject& o : objects) {
    if (o.cls == cls) out.push_back(&o);
  }
  return out;
}

}  // namespace

PlotTable BuildTable(std::span<const TableObject> objects,
                     const PlotLayout& layout) {
  auto xticks = OfClass(objects, ObjectClass::kXAxisTicks);
  if (xticks.empty()) {
    throw Error(ErrorCode::kInsufficientTicks, "no x-tick labels");
  }
  std::stable_sort(xticks.begin(), xticks.end(), [](auto* a, auto* b) {
    return a->box.center_x() < b->box.center_x();
  });

  std::vector<const TableObject*> data;
  for (const TableObject& o : objects) {
    if ((o.cls == ObjectClass::kBar || o.cls == ObjectClass::kDotLine) &&
        o.box.center_y() < layout.x_axis_row) {
      data.push_back(&o);
    }
  }
  if (data.empty()) {
    throw Error(ErrorCode::kNoDataObjects, "no bars or dots detected");
  }
  const TickScale scale = BuildScale(objects);

  auto labels = OfClass(objects, ObjectClass::kLegendLabel);
  std::stable_sort(labels.begin(), labels.end(), [](auto* a, auto* b) {
    return a->box.center_y() < b->box.center_y();
  });
  const auto previews = OfClass(objects, ObjectClass::kLegendPreview);

  std::vector<std::string> rows, cols;
  for (const auto* t : xticks) rows.push_back(t->text);
  // Series colour per column, when a preview sits on the label's line.
  std::vector<std::optional<Rgb>> series_color;
  for (const auto* label : labels) {
    cols.push_back(label->text);
    const TableObject* best = nullptr;
    for (const auto* p : previews) {
      if (p->box.center_x() >= label->box.center_x()) continue;
      if (!best || std::abs(p->box.center_y() - label->box.center_y()) <
                       std::abs(best->box.center_y() - label->box.center_y())) {
        best = p;
      }
    }
    series_color.push_back(best ? std::optional<Rgb>(best->fill)
                                : std::nullopt);
  }
  if (cols.empty()) {
    cols.push_back(kDefaultSeriesName);
    series_color.push_back(std::nullopt);
  }

  PlotTable table(rows, cols);
  // Higher-scored objects claim a cell first.
  std::stable_sort(data.begin(), data.end(),
                   [](auto* a, auto* b) { return a->score > b->score; });
  for (const TableObject* o : data) {
    size_t row = 0;
    for (size_t r = 1; r < xticks.size(); ++r) {
      if (std::abs(xticks[r]->box.center_x() - o->box.center_x()) <
          std::abs(xticks[row]->box.center_x() - o->box.center_x())) {
        row = r;
      }
    }
    size_t col = 0;
    double best = INFINITY;
    for (size_t c = 0; c < series_color.size(); ++c) {
      if (!series_color[c]) continue;
      const double d = ColorDistanceSq(*series_color[c], o->fill);
      if (d < best) {
        best = d;
        col = c;
      }
    }
    const double y = o->cls == ObjectClass::kBar ? o->box.y0()
                                                  : o->box.center_y();
    auto& cell = table.values[row][col];
    if (!cell) cell = InterpolateValue(y, scale);
  }
  return table;
}

Rgb MeanFill(const RasterImage& image, const Box& box, Rgb background) {
  const int x0 = std::max(0, static_cast<int>(std::floor(box.x0())));
  const int y0 = std::max(0, static_cast<int>(std::floor(box.y0())));
  const int x1 = std::min(image.width(), static_cast<int>(std::ceil(box.x1())));
  const int y1 =
      std::min(image.height(), static_cast<int>(std::ceil(box.y1())));
  double r = 0, g = 0, b = 0;
  long n = 0;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      const Rgb c = image.at(x, y);
      if (c == background) continue;
      r += c.r;
      g += c.g;
      b += c.b;
      ++n;
    }
  }
  if (n == 0) return background;
  return {static_cast<uint8_t>(std::lround(r / n)),
          static_cast<uint8_t>(std::lround(g / n)),
          static_cast<uint8_t>(std::lround(b / n))};
}

std::vector<TableObject> ObjectsFromAnnotations(
    std::span<const Annotation> annotations, const RasterImage& image) {
  const Rgb background = DominantColor(image);
  std::vector<TableObject> out;
  for (const Annotation& a : annotations) {
    out.push_back({a.cls, a.box, a.text.value_or(""),
                   MeanFill(image, a.box, background), 1.0});
  }
  return out;
}

AnnotationTextSource::AnnotationTextSource(std::vector<Annotation> annotations,
                                           double min_iou)
    : annotations_(std::move(annotations)), min_iou_(min_iou) {}

std::optional<std::string> AnnotationTextSource::TextFor(
    const Detection& detection) const {
  const Annotation* best = nullptr;
  double best_iou = min_iou_;
  for (const Annotation& a : annotations_) {
    if (!IsTextual(a.cls) || !a.text) continue;
    const double iou = Iou(a.box, detection.box);
    if (iou >= best_iou && (!best || iou > best_iou)) {
      best = &a;
      best_iou = iou;
    }
  }
  if (!best) return std::nullopt;
  return best->text;
}

std::vector<TableObject> ObjectsFromDetections(
    std::span<const Detection> detections, const RasterImage& image,
    const TextSource& text) {
  const Rgb background = DominantColor(image);
  std::vector<TableObject> out;
  for (const Detection& d : detections) {
    TableObject o{d.cls, d.box, "", MeanFill(image, d.box, background),
                  d.score};
    if (IsTextual(d.cls)) {
      auto t = text.TextFor(d);
      if (!t) continue;
      o.text = *t;
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace plotkit
