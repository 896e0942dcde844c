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
#include "plotkit/detector.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "plotkit/error.h"
#include "plotkit/linking.h"
#include "plotkit/parallel.h"

namespace plotkit {
namespace {

int Chroma(Rgb c) {
  return std::max({c.r, c.g, c.b}) - std::min({c.r, c.g, c.b});
}

bool IsInk(Rgb c, Rgb background) {
  return std::abs(int{c.r} - background.r) > kInkTolerance ||
         std::abs(int{c.g} - background.g) > kInkTolerance ||
         std::abs(int{c.b} - background.b) > kInkTolerance;
}

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

bool TextLike(const ProposalFeatures& f, const ClassifierConfig& cfg) {
  return f.ink_count > 0 && f.edge_density > cfg.text_edge_density &&
         f.ink_density < cfg.text_ink_density && f.ink_luma < cfg.dark_luma &&
         f.ink_chroma < cfg.saturated_chroma;
}

double Gap(double a0, double a1, double b0, double b1) {
  return std::max(b0 - a1, a0 - b1);
}

bool ShouldLink(const Box& a, const Box& b, Direction d, double max_gap) {
  if (d == Direction::kLeft || d == Direction::kRight) {
    return Gap(a.x0(), a.x1(), b.x0(), b.x1()) <= max_gap &&
           Gap(a.y0(), a.y1(), b.y0(), b.y1()) < 0.0;
  }
  return Gap(a.y0(), a.y1(), b.y0(), b.y1()) <= max_gap &&
         Gap(a.x0(), a.x1(), b.x0(), b.x1()) < 0.0;
}

auto SortKey(const Detection& d) {
  return std::make_tuple(static_cast<int>(d.cls), -d.score, d.box.x0(),
                         d.box.y0(), d.box.x1(), d.box.y1());
}

}  // namespace

ProposalFeatures ExtractFeatures(const RasterImage& image, const Box& box,
                                 const EdgeMap& edges, Rgb background) {
  if (!(box.area() > 0.0) || !image.bounds().Contains(box)) {
    throw Error(ErrorCode::kOutOfBounds,
                "feature box " + box.ToString() + " outside image or empty");
  }
  const int x0 = static_cast<int>(std::floor(box.x0()));
  const int y0 = static_cast<int>(std::floor(box.y0()));
  const int x1 = static_cast<int>(std::ceil(box.x1()));
  const int y1 = static_cast<int>(std::ceil(box.y1()));
  const double n = static_cast<double>(x1 - x0) * (y1 - y0);

  ProposalFeatures f;
  f.box = box;
  f.center_x = box.center_x() / image.width();
  f.center_y = box.center_y() / image.height();
  f.width = box.width() / image.width();
  f.height = box.height() / image.height();
  f.aspect = box.width() / box.height();

  std::array<double, 3> sum = {0, 0, 0}, sum_sq = {0, 0, 0};
  long edge_count = 0;
  int ix0 = x1, iy0 = y1, ix1 = x0, iy1 = y0;
  double chroma = 0.0, luma = 0.0;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      const Rgb c = image.at(x, y);
      const double ch[3] = {static_cast<double>(c.r), static_cast<double>(c.g),
                            static_cast<double>(c.b)};
      for (int k = 0; k < 3; ++k) {
        sum[k] += ch[k];
        sum_sq[k] += ch[k] * ch[k];
      }
      if (edges.get(x, y)) ++edge_count;
      if (IsInk(c, background)) {
        ++f.ink_count;
        chroma += Chroma(c);
        luma += Luma(c);
        ix0 = std::min(ix0, x);
        iy0 = std::min(iy0, y);
        ix1 = std::max(ix1, x + 1);
        iy1 = std::max(iy1, y + 1);
      }
    }
  }
  for (int k = 0; k < 3; ++k) {
    f.fill_mean[k] = sum[k] / n;
    f.fill_variance[k] = std::max(0.0, sum_sq[k] / n - f.fill_mean[k] * f.fill_mean[k]);
  }
  f.edge_density = Clamp01(edge_count / n);
  f.ink_density = Clamp01(f.ink_count / n);
  if (f.ink_count > 0) {
    f.ink_box = Box(ix0, iy0, ix1, iy1);
    f.ink_box_density = f.ink_count / f.ink_box->area();
    f.ink_chroma = chroma / f.ink_count;
    f.ink_luma = luma / f.ink_count;
  }
  return f;
}

Classification Classify(const ProposalFeatures& f, const PlotLayout& layout,
                        const ClassifierConfig& cfg) {
  if (f.ink_count == 0 || !f.ink_box) return {};
  const Box& ink = *f.ink_box;
  const double cx = ink.center_x();
  const double cy = ink.center_y();
  const double w = ink.width();
  const double h = ink.height();
  const double long_side = std::max(w, h);
  const double short_side = std::min(w, h);
  const bool saturated = f.ink_chroma >= cfg.saturated_chroma;
  const bool text = TextLike(f, cfg);

  if (layout.legend && layout.legend->Contains(cx, cy)) {
    if (saturated && long_side <= cfg.preview_max_side_px &&
        f.ink_box_density >= cfg.preview_fill) {
      return {ObjectClass::kLegendPreview, 0.5 + 0.5 * f.ink_box_density};
    }
    if (text) return {ObjectClass::kLegendLabel, 0.9};
    return {};
  }
  if (cy >= layout.x_axis_row) {
    if (!text) return {};
    if (cy - layout.x_axis_row < cfg.x_tick_band_px) {
      return {ObjectClass::kXAxisTicks, 0.9};
    }
    return {ObjectClass::kXAxisLabel, 0.85};
  }
  if (cx < layout.y_axis_col) {
    if (!text) return {};
    if (cx < cfg.y_label_band_px) return {ObjectClass::kYAxisLabel, 0.85};
    return {ObjectClass::kYAxisTicks, 0.9};
  }
  if (cy < layout.plot_area.y0()) {
    if (text) return {ObjectClass::kPlotTitle, 0.9};
    return {};
  }
  if (layout.plot_area.Contains(cx, cy) && saturated) {
    if (short_side >= cfg.bar_min_side_px &&
        long_side >= cfg.bar_min_long_side_px &&
        f.ink_box_density >= cfg.bar_fill) {
      return {ObjectClass::kBar, Clamp01(0.5 + 0.5 * f.ink_box_density)};
    }
    if (long_side <= cfg.dot_max_side_px && short_side >= cfg.dot_min_side_px &&
        f.ink_box_density >= cfg.dot_fill &&
        std::abs(w - h) <= cfg.dot_max_skew_px) {
      return {ObjectClass::kDotLine, Clamp01(0.5 + 0.5 * f.ink_box_density)};
    }
  }
  return {};
}

bool IsAxisInk(Rgb c) { return Luma(c) < 80.0 && Chroma(c) < 60; }

PlotLayout InferLayout(const RasterImage& image, const EdgeMap& edges,
                       int min_axis_px) {
  (void)edges;
  const int w = image.width();
  const int h = image.height();
  std::vector<uint8_t> dark(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      dark[static_cast<size_t>(y) * w + x] = IsAxisInk(image.at(x, y));
    }
  }
  auto is_dark = [&](int x, int y) {
    return dark[static_cast<size_t>(y) * w + x] != 0;
  };

  // Longest horizontal run (first found wins ties).
  int best_h = 0, h_row = -1, h_start = 0;
  for (int y = 0; y < h; ++y) {
    int run = 0;
    for (int x = 0; x <= w; ++x) {
      if (x < w && is_dark(x, y)) {
        ++run;
        continue;
      }
      if (run > best_h) {
        best_h = run;
        h_row = y;
        h_start = x - run;
      }
      run = 0;
    }
  }
  int best_v = 0, v_col = -1, v_start = 0;
  for (int x = 0; x < w; ++x) {
    int run = 0;
    for (int y = 0; y <= h; ++y) {
      if (y < h && is_dark(x, y)) {
        ++run;
        continue;
      }
      if (run > best_v) {
        best_v = run;
        v_col = x;
        v_start = y - run;
      }
      run = 0;
    }
  }
  if (best_h < min_axis_px || best_v < min_axis_px) {
    throw Error(ErrorCode::kLayoutNotFound,
                "no axis lines found (longest runs " + std::to_string(best_h) +
                    " x " + std::to_string(best_v) + " px)");
  }

  PlotLayout layout;
  layout.x_axis_row = h_row;
  layout.y_axis_col = v_col;
  const int plot_x1 = h_start + best_h;
  if (plot_x1 <= v_col + 1 || h_row <= v_start) {
    throw Error(ErrorCode::kLayoutNotFound, "axis lines do not form a plot");
  }
  layout.plot_area = Box(v_col + 1, v_start, plot_x1, h_row);

  // Legend: everything non-background right of the plot area.
  const Rgb background = DominantColor(image);
  int lx0 = w, ly0 = h, lx1 = 0, ly1 = 0;
  for (int y = v_start; y < h_row; ++y) {
    for (int x = plot_x1 + 2; x < w; ++x) {
      if (!IsInk(image.at(x, y), background)) continue;
      lx0 = std::min(lx0, x);
      ly0 = std::min(ly0, y);
      lx1 = std::max(lx1, x + 1);
      ly1 = std::max(ly1, y + 1);
    }
  }
  if (lx1 > lx0) layout.legend = Box(lx0, ly0, lx1, ly1);
  return layout;
}

std::vector<Detection> NonMaxSuppression(std::vector<Detection> detections,
                                         double iou_threshold) {
  std::stable_sort(detections.begin(), detections.end(),
                   [](const Detection& a, const Detection& b) {
                     return SortKey(a) < SortKey(b);
                   });
  std::vector<Detection> kept;
  for (const Detection& d : detections) {
    bool suppressed = false;
    for (const Detection& k : kept) {
      if (k.cls == d.cls && Iou(k.box, d.box) > iou_threshold) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(d);
  }
  return kept;
}

DetectResult Detect(const RasterImage& image, const DetectorConfig& cfg) {
  DetectResult result;
  const ProposalResult proposed = ProposeRegionsWithEdges(image, cfg.proposals);
  PlotLayout layout;
  try {
    layout = InferLayout(image, proposed.edges);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kLayoutNotFound) throw;
    result.warnings.push_back(std::string("layout-not-found: ") + e.what());
    return result;
  }
  result.layout = layout;
  const Rgb background = DominantColor(image);

  // Classified pieces, grouped by class so linking stays within a class.
  std::map<ObjectClass, std::vector<Detection>> pieces;
  for (const Proposal& p : proposed.proposals) {
    const ProposalFeatures f =
        ExtractFeatures(image, p.box, proposed.edges, background);
    const Classification c = Classify(f, layout, cfg.classifier);
    if (c.cls == ObjectClass::kBackground) continue;
    pieces[c.cls].push_back({*f.ink_box, c.cls, c.score});
  }

  std::vector<Detection> merged;
  for (auto& [cls, dets] : pieces) {
    if (!IsTextual(cls)) {
      merged.insert(merged.end(), dets.begin(), dets.end());
      continue;
    }
    std::vector<Box> boxes;
    for (const Detection& d : dets) boxes.push_back(d.box);
    const NeighborIndex neighbors = FindNeighbors(boxes, cfg.link_window_px);
    std::vector<LinkVector> links(boxes.size());
    for (size_t i = 0; i < boxes.size(); ++i) {
      for (Direction d : kAllDirections) {
        if (const auto& j = neighbors[i][d]) {
          links[i][d] = ShouldLink(boxes[i], boxes[*j], d, cfg.link_gap_px);
        }
      }
    }
    for (const auto& group : LinkComponents(boxes, links, neighbors)) {
      Detection d = dets[group[0]];
      for (int m : group) {
        d.box = Enclosing(d.box, dets[m].box);
        d.score = std::max(d.score, dets[m].score);
      }
      merged.push_back(d);
    }
  }
  result.detections = NonMaxSuppression(std::move(merged), cfg.nms_iou);
  return result;
}

std::vector<DetectResult> DetectBatch(std::span<const RasterImage> images,
                                      const DetectorConfig& cfg, int workers) {
  std::vector<DetectResult> out(images.size());
  ParallelFor(images.size(), workers,
              [&](size_t i) { out[i] = Detect(images[i], cfg); });
  return out;
}

std::vector<DetectResult> DetectBatchSerial(std::span<const RasterImage> images,
                                            const DetectorConfig& cfg) {
  std::vector<DetectResult> out;
  out.reserve(images.size());
  for (const RasterImage& img : images) out.push_back(Detect(img, cfg));
  return out;
}

}  // namespace plotkit
