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
#include "plotkit/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "plotkit/error.h"
#include "plotkit/font.h"
#include "plotkit/json_io.h"
#include "plotkit/parallel.h"
#include "plotkit/targets.h"

namespace plotkit {
namespace {

// Canvas geometry, in pixels.
constexpr int kTitleTop = 14;
constexpr int kTitleScale = 2;
constexpr int kTitleToPlotGap = 30;
constexpr int kMargin = 12;
constexpr int kYLabelToTicksGap = 20;
constexpr int kTickLabelToAxis = 10;
constexpr int kTickMarkLen = 5;
constexpr int kYTickScale = 2;
constexpr int kAxisRowFromBottom = 75;
constexpr int kDataLift = 3;  // blank rows between data and the x-axis
constexpr int kXTickLabelOffset = 10;
constexpr int kXLabelOffset = 43;
constexpr int kAxisOverhang = 10;
constexpr int kRightMargin = 24;
constexpr int kLegendRightMargin = 16;
constexpr int kLegendToPlotGap = 24;
constexpr int kSwatchSide = 12;
constexpr int kSwatchToLabel = 8;
constexpr int kLegendPitch = 36;
constexpr int kBarGap = 4;
constexpr int kMinBarWidth = 4;
constexpr int kMaxBarWidth = 48;
constexpr int kMarkerRadius = 3;
constexpr int kMarkerHalo = 6;
constexpr int kMinMarkerSeparation = 14;

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) from the top 53 bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, n).
  int Index(int n) {
    return std::min(n - 1, static_cast<int>(Uniform() * n));
  }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(Index(static_cast<int>(v.size())))];
  }

 private:
  std::mt19937_64 engine_;
};

double RoundSignificant(double v, int digits) {
  if (v == 0.0) return 0.0;
  const double scale =
      std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(v))));
  return std::round(v * scale) / scale;
}

std::string FormatTick(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

const std::vector<std::string>& Metrics() {
  static const std::vector<std::string> v = {
      "Number of tourists", "Total exports",     "Energy use",
      "Annual rainfall",    "Average income",    "Forest area",
      "Rice production",    "Internet users",    "School enrolment",
      "Fish catch",         "Electricity output", "Military spending"};
  return v;
}

const std::vector<std::string>& YLabels() {
  static const std::vector<std::string> v = {
      "Number of people", "Value in USD", "Area in sq km", "Millimetres",
      "Thousand tonnes",  "Percent",      "Kilowatt hours"};
  return v;
}

const std::vector<std::string>& Places() {
  static const std::vector<std::string> v = {
      "Cuba",  "New Zealand", "South Africa", "Peru",   "Kenya",
      "Chile", "Nepal",       "Sri Lanka",    "Norway", "Costa Rica",
      "Ghana", "Uruguay",     "Iceland",      "Mongolia"};
  return v;
}

const std::vector<std::string>& Months() {
  static const std::vector<std::string> v = {"Jan", "Feb", "Mar", "Apr",
                                             "May", "Jun", "Jul", "Aug",
                                             "Sep", "Oct", "Nov", "Dec"};
  return v;
}

// Category labels and the matching x-axis label.
std::pair<std::vector<std::string>, std::string> CategoryLabels(Rng& rng,
                                                                int n,
                                                                int style) {
  std::vector<std::string> labels;
  switch (style) {
    case 0: {
      const int start = 1990 + rng.Index(25);
      for (int i = 0; i < n; ++i) labels.push_back(std::to_string(start + i));
      return {labels, rng.Index(2) == 0 ? "Year" : "Calendar year"};
    }
    case 1: {
      const int start = rng.Index(12 - n + 1);
      for (int i = 0; i < n; ++i) labels.push_back(Months()[start + i]);
      return {labels, "Month"};
    }
    default: {
      const int year = 2 + rng.Index(8);
      for (int i = 0; i < n; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "Q%d %02d", i % 4 + 1, year + i / 4);
        labels.push_back(buf);
      }
      return {labels, "Fiscal quarter"};
    }
  }
}

struct AxisTicks {
  double step = 1.0;
  int intervals = 4;
  int decimals = 0;
};

// Smallest axis maximum >= max_value using 4..8 intervals of a step from
// {1, 2, 2.5, 5} x 10^k.
AxisTicks ChooseTicks(double max_value) {
  AxisTicks best;
  double best_top = INFINITY;
  const int base_exp = static_cast<int>(std::floor(std::log10(max_value))) - 2;
  for (int e = base_exp; e <= base_exp + 3; ++e) {
    for (double mant : {1.0, 2.0, 2.5, 5.0}) {
      const double step = mant * std::pow(10.0, e);
      for (int n = 4; n <= 8; ++n) {
        const double top = step * n;
        if (top + 1e-9 * top < max_value) continue;
        if (top < best_top - 1e-9 * top) {
          best_top = top;
          best.step = step;
          best.intervals = n;
          int decimals = std::max(0, -e);
          if (mant == 2.5) decimals = std::max(0, 1 - e);
          best.decimals = decimals;
        }
      }
    }
  }
  return best;
}

class Canvas {
 public:
  explicit Canvas(const PlotSpec& spec)
      : image_(spec.width, spec.height, kWhite) {}

  RasterImage& image() { return image_; }

  Annotation& AddText(ObjectClass cls, const std::string& text,
                      const TextMask& mask, int x, int y) {
    const PlacedText placed = DrawText(image_, mask, x, y, kBlack);
    Annotation a;
    a.object_id = static_cast<int>(annotations_.size());
    a.cls = cls;
    a.box = placed.box;
    a.text = text;
    a.words = placed.words;
    annotations_.push_back(std::move(a));
    return annotations_.back();
  }

  void AddBox(ObjectClass cls, const Box& box) {
    Annotation a;
    a.object_id = static_cast<int>(annotations_.size());
    a.cls = cls;
    a.box = box;
    annotations_.push_back(std::move(a));
  }

  std::vector<Annotation>& annotations() { return annotations_; }

 private:
  RasterImage image_;
  std::vector<Annotation> annotations_;
};

void DrawLine(RasterImage& img, int x0, int y0, int x1, int y1, Rgb c) {
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    if (img.InBounds(x0, y0)) img.set(x0, y0, c);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

void DrawMarker(RasterImage& img, int cx, int cy, Rgb c) {
  const int r = kMarkerRadius;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      if (dx * dx + dy * dy <= r * r + 1 && img.InBounds(cx + dx, cy + dy)) {
        img.set(cx + dx, cy + dy, c);
      }
    }
  }
}

}  // namespace

const char* PlotKindName(PlotKind kind) {
  return kind == PlotKind::kVerticalBar ? "vertical_bar" : "dot_line";
}

const std::vector<Rgb>& DefaultPalette() {
  static const std::vector<Rgb> v = {
      {31, 119, 180}, {255, 127, 14}, {44, 160, 44},  {214, 39, 40},
      {148, 103, 189}, {23, 190, 207}, {188, 189, 34}, {227, 119, 194}};
  return v;
}

void ValidateSpec(const PlotSpec& spec) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kSpecValidation, msg);
  };
  if (spec.series < 1 || spec.series > 3) {
    fail("series count must be in 1..3, got " + std::to_string(spec.series));
  }
  if (spec.categories < 2 || spec.categories > 8) {
    fail("category count must be in 2..8, got " +
         std::to_string(spec.categories));
  }
  if (!(std::isfinite(spec.value_lo) && std::isfinite(spec.value_hi)) ||
      spec.value_lo <= 0.0 || spec.value_hi < spec.value_lo) {
    fail("value range must satisfy 0 < lo <= hi");
  }
  if (static_cast<int>(spec.palette.size()) < spec.series) {
    fail("palette has fewer colours than series");
  }
  for (size_t i = 0; i < spec.palette.size(); ++i) {
    if (spec.palette[i] == kWhite || spec.palette[i] == kBlack) {
      fail("palette colours must differ from background and text");
    }
  }
  if (spec.width < 400 || spec.height < 400 || spec.width > 4096 ||
      spec.height > 4096) {
    fail("canvas must be between 400 and 4096 px per side");
  }
}

PlotSpec RandomSpec(uint64_t seed, PlotKind kind, int width, int height) {
  Rng rng(seed ^ 0x5eedf00dULL);
  PlotSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  spec.width = width;
  spec.height = height;
  spec.series = 1 + rng.Index(3);
  spec.categories = 2 + rng.Index(7);
  spec.value_hi = RoundSignificant(std::pow(10.0, rng.Uniform(1.0, 3.5)), 3);
  spec.value_lo = RoundSignificant(0.4 * spec.value_hi, 3);
  const auto& palette = DefaultPalette();
  const int offset = rng.Index(static_cast<int>(palette.size()));
  for (size_t i = 0; i < palette.size(); ++i) {
    spec.palette.push_back(palette[(offset + i) % palette.size()]);
  }
  return spec;
}

GeneratedPlot GeneratePlot(const PlotSpec& spec) {
  ValidateSpec(spec);
  Rng rng(spec.seed);
  const int W = spec.width;
  const int H = spec.height;
  const int ns = spec.series;
  const int nc = spec.categories;

  // Content.
  std::vector<std::string> series_names;
  while (static_cast<int>(series_names.size()) < ns) {
    const std::string& p = rng.Pick(Places());
    if (std::find(series_names.begin(), series_names.end(), p) ==
        series_names.end()) {
      series_names.push_back(p);
    }
  }
  const std::string& metric = rng.Pick(Metrics());
  std::string title = ns == 1 ? metric + " in " + series_names[0]
                              : metric + " by country";
  if (RasterizeText(title, kTitleScale).width > W - 40) title = metric;
  const std::string y_label = rng.Pick(YLabels());
  const int style = rng.Index(3);
  auto [categories, x_label] = CategoryLabels(rng, nc, style);

  std::vector<std::vector<double>> values(nc, std::vector<double>(ns));
  for (auto& row : values) {
    for (double& v : row) {
      v = RoundSignificant(rng.Uniform(spec.value_lo, spec.value_hi), 3);
    }
  }

  Canvas canvas(spec);
  RasterImage& img = canvas.image();

  // Title.
  const TextMask title_mask = RasterizeText(title, kTitleScale);
  canvas.AddText(ObjectClass::kPlotTitle, title, title_mask,
                 (W - title_mask.width) / 2, kTitleTop);
  const int title_bottom = kTitleTop + title_mask.height;

  // Vertical scale.
  const AxisTicks ticks = ChooseTicks(spec.value_hi);
  const int x_axis_row = H - kAxisRowFromBottom;
  const int zero_y = x_axis_row - kDataLift;
  const int top_tick_min = title_bottom + kTitleToPlotGap;
  const int pitch = (zero_y - top_tick_min) / ticks.intervals;
  const int top_tick_row = zero_y - pitch * ticks.intervals;
  const int axis_top = top_tick_row - kAxisOverhang;
  ValueTransform transform{static_cast<double>(zero_y), pitch / ticks.step};

  std::vector<std::string> tick_texts;
  std::vector<TextMask> tick_masks;
  int max_tick_w = 0;
  for (int k = 0; k <= ticks.intervals; ++k) {
    tick_texts.push_back(FormatTick(ticks.step * k, ticks.decimals));
    tick_masks.push_back(RasterizeText(tick_texts.back(), kYTickScale));
    max_tick_w = std::max(max_tick_w, tick_masks.back().width);
  }

  // Y label (rotated, left band).
  const TextMask y_label_mask = RotateCcw(RasterizeText(y_label, 1));
  const int y_axis_col = kMargin + y_label_mask.width + kYLabelToTicksGap +
                         max_tick_w + kTickLabelToAxis;

  // Legend geometry decides the plot's right edge.
  std::vector<TextMask> legend_masks;
  int legend_w = 0;
  if (ns >= 2) {
    for (const auto& name : series_names) {
      legend_masks.push_back(RasterizeText(name, 1));
      legend_w = std::max(legend_w, kSwatchSide + kSwatchToLabel +
                                        legend_masks.back().width);
    }
  }
  const int legend_x0 = W - kLegendRightMargin - legend_w;
  const int plot_right =
      ns >= 2 ? legend_x0 - kLegendToPlotGap : W - kRightMargin;
  if (plot_right - y_axis_col < 40 * nc) {
    throw Error(ErrorCode::kSpecValidation,
                "canvas too narrow for " + std::to_string(nc) + " categories");
  }

  // Y label, centred on the axis span.
  {
    const int y0 = (axis_top + x_axis_row) / 2 - y_label_mask.height / 2;
    canvas.AddText(ObjectClass::kYAxisLabel, y_label, y_label_mask, kMargin,
                   y0);
  }

  // Categories.
  const double group_pitch =
      static_cast<double>(plot_right - y_axis_col) / nc;
  std::vector<int> centers;
  for (int i = 0; i < nc; ++i) {
    centers.push_back(
        static_cast<int>(std::lround(y_axis_col + group_pitch * (i + 0.5))));
  }

  // X label and x tick labels.
  {
    const TextMask m = RasterizeText(x_label, 1);
    const int cx = (y_axis_col + plot_right) / 2;
    canvas.AddText(ObjectClass::kXAxisLabel, x_label, m, cx - m.width / 2,
                   x_axis_row + kXLabelOffset);
  }

  // Axes.
  img.FillRect(y_axis_col, axis_top, y_axis_col + 1, x_axis_row + 1, kBlack);
  img.FillRect(y_axis_col, x_axis_row, plot_right, x_axis_row + 1, kBlack);

  for (int i = 0; i < nc; ++i) {
    const TextMask m = RasterizeText(categories[i], 1);
    canvas.AddText(ObjectClass::kXAxisTicks, categories[i], m,
                   centers[i] - m.width / 2, x_axis_row + kXTickLabelOffset);
    img.FillRect(centers[i], x_axis_row + 1, centers[i] + 1,
                 x_axis_row + kTickMarkLen, kBlack);
  }
  for (int k = 0; k <= ticks.intervals; ++k) {
    const int row = zero_y - pitch * k;
    const TextMask& m = tick_masks[k];
    canvas.AddText(ObjectClass::kYAxisTicks, tick_texts[k], m,
                   y_axis_col - kTickLabelToAxis - m.width, row - m.height / 2);
    img.FillRect(y_axis_col - kTickMarkLen, row, y_axis_col, row + 1, kBlack);
  }

  // Legend.
  std::optional<Box> legend_box;
  if (ns >= 2) {
    int y = top_tick_row;
    std::vector<Box> items;
    for (int s = 0; s < ns; ++s) {
      const Box swatch(legend_x0, y, legend_x0 + kSwatchSide, y + kSwatchSide);
      img.FillRect(legend_x0, y, legend_x0 + kSwatchSide, y + kSwatchSide,
                   spec.palette[s]);
      canvas.AddBox(ObjectClass::kLegendPreview, swatch);
      items.push_back(swatch);
      y += kLegendPitch;
    }
    y = top_tick_row;
    for (int s = 0; s < ns; ++s) {
      const TextMask& m = legend_masks[s];
      const Annotation& a = canvas.AddText(
          ObjectClass::kLegendLabel, series_names[s], m,
          legend_x0 + kSwatchSide + kSwatchToLabel,
          y + kSwatchSide / 2 - m.height / 2);
      items.push_back(a.box);
      y += kLegendPitch;
    }
    Box b = items[0];
    for (const Box& it : items) b = Enclosing(b, it);
    legend_box = b;
  }

  // Data.
  if (spec.kind == PlotKind::kVerticalBar) {
    const int bw = std::clamp(
        static_cast<int>(std::floor((0.72 * group_pitch - kBarGap * (ns - 1)) /
                                    ns)),
        kMinBarWidth, kMaxBarWidth);
    const int group_w = ns * bw + kBarGap * (ns - 1);
    for (int i = 0; i < nc; ++i) {
      const int gx = centers[i] - group_w / 2;
      for (int s = 0; s < ns; ++s) {
        const int x0 = gx + s * (bw + kBarGap);
        int top = static_cast<int>(std::lround(transform.ToPixel(values[i][s])));
        top = std::min(top, zero_y - 1);
        img.FillRect(x0, top, x0 + bw, zero_y, spec.palette[s]);
        canvas.AddBox(ObjectClass::kBar, Box(x0, top, x0 + bw, zero_y));
      }
    }
  } else {
    // Resample so markers in one category stay apart.
    auto marker_row = [&](double v) {
      return static_cast<int>(std::floor(transform.ToPixel(v)));
    };
    for (int i = 0; i < nc; ++i) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        bool ok = true;
        for (int a = 0; a < ns && ok; ++a) {
          for (int b = a + 1; b < ns && ok; ++b) {
            ok = std::abs(marker_row(values[i][a]) - marker_row(values[i][b])) >=
                 kMinMarkerSeparation;
          }
        }
        if (ok) break;
        for (double& v : values[i]) {
          v = RoundSignificant(rng.Uniform(spec.value_lo, spec.value_hi), 3);
        }
      }
    }
    for (int s = 0; s < ns; ++s) {
      for (int i = 0; i + 1 < nc; ++i) {
        DrawLine(img, centers[i], marker_row(values[i][s]), centers[i + 1],
                 marker_row(values[i + 1][s]), spec.palette[s]);
      }
    }
    for (int s = 0; s < ns; ++s) {
      for (int i = 0; i < nc; ++i) {
        const int cy = marker_row(values[i][s]);
        img.FillRect(centers[i] - kMarkerHalo, cy - kMarkerHalo,
                     centers[i] + kMarkerHalo + 1, cy + kMarkerHalo + 1,
                     kWhite);
      }
    }
    for (int s = 0; s < ns; ++s) {
      for (int i = 0; i < nc; ++i) {
        const int cy = marker_row(values[i][s]);
        DrawMarker(img, centers[i], cy, spec.palette[s]);
        canvas.AddBox(ObjectClass::kDotLine,
                      Box(centers[i] - kMarkerRadius, cy - kMarkerRadius,
                          centers[i] + kMarkerRadius + 1,
                          cy + kMarkerRadius + 1));
      }
    }
  }

  GeneratedPlot out;
  out.annotations = std::move(canvas.annotations());
  for (const Annotation& a : out.annotations) {
    if (!img.bounds().Contains(a.box) || a.box.area() <= 0.0) {
      throw Error(ErrorCode::kSpecValidation,
                  "object " + std::to_string(a.object_id) +
                      " falls outside the canvas");
    }
  }
  ValidateAnnotations(out.annotations);

  std::vector<std::string> cols =
      ns >= 2 ? series_names : std::vector<std::string>{kDefaultSeriesName};
  out.table = PlotTable(categories, cols);
  for (int i = 0; i < nc; ++i) {
    for (int s = 0; s < ns; ++s) out.table.values[i][s] = values[i][s];
  }
  out.layout.x_axis_row = x_axis_row;
  out.layout.y_axis_col = y_axis_col;
  out.layout.plot_area = Box(y_axis_col + 1, axis_top, plot_right, x_axis_row);
  out.layout.legend = legend_box;
  out.transform = transform;
  out.image = std::move(canvas.image());
  return out;
}

PlotSpec CorpusSpec(uint64_t base_seed, int index) {
  static constexpr std::pair<int, int> kSizes[] = {
      {650, 650}, {800, 600}, {600, 720}};
  const PlotKind kind =
      index % 2 == 0 ? PlotKind::kVerticalBar : PlotKind::kDotLine;
  const auto [w, h] = kSizes[(index / 2) % 3];
  return RandomSpec(base_seed + static_cast<uint64_t>(index), kind, w, h);
}

CorpusManifest GenCorpus(int n, uint64_t base_seed,
                         const std::filesystem::path& out_dir, int workers) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "corpus size must be >= 1");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw Error(ErrorCode::kIo, "cannot create directory " + out_dir.string());
  }
  CorpusManifest manifest;
  manifest.entries.resize(static_cast<size_t>(n));
  ParallelFor(static_cast<size_t>(n), workers, [&](size_t i) {
    const PlotSpec spec = CorpusSpec(base_seed, static_cast<int>(i));
    const GeneratedPlot plot = GeneratePlot(spec);
    char stem[32];
    std::snprintf(stem, sizeof(stem), "plot_%05zu", i);
    ManifestEntry& e = manifest.entries[i];
    e.image = std::string(stem) + ".png";
    e.annotation = std::string(stem) + ".ann.json";
    e.table = std::string(stem) + ".table.json";
    e.seed = spec.seed;
    const std::filesystem::path tmp_png = out_dir / (e.image + ".tmp");
    SavePng(plot.image, tmp_png);
    std::filesystem::rename(tmp_png, out_dir / e.image, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot write " + e.image);
    AnnotationFile ann{e.image, spec.width, spec.height, plot.annotations};
    WriteFileAtomic(out_dir / e.annotation, DumpJson(ToJson(ann)));
    WriteFileAtomic(out_dir / e.table, DumpJson(ToJson(plot.table)));
  });
  WriteFileAtomic(out_dir / "manifest.json", DumpJson(ToJson(manifest)));
  return manifest;
}

}  // namespace plotkit
