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
#ifndef PLOTKIT_DETECTOR_H_
#define PLOTKIT_DETECTOR_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plotkit/detection.h"
#include "plotkit/edges.h"
#include "plotkit/image.h"
#include "plotkit/layout.h"
#include "plotkit/proposals.h"

namespace plotkit {

// Statistics of one proposal region. The first block are the normalized
// descriptors; the rest are absolute quantities the rule classifier uses.
struct ProposalFeatures {
  double center_x = 0.0;  // [0, 1] of image width
  double center_y = 0.0;
  double width = 0.0;     // [0, 1] of image width
  double height = 0.0;
  double aspect = 0.0;    // width / height
  std::array<double, 3> fill_mean = {0, 0, 0};
  std::array<double, 3> fill_variance = {0, 0, 0};
  double edge_density = 0.0;  // edge pixels / area
  double ink_density = 0.0;   // non-background pixels / area

  Box box;                     // the region itself, in pixels
  std::optional<Box> ink_box;  // tight box of the non-background pixels
  int ink_count = 0;
  double ink_box_density = 0.0;  // ink pixels / ink_box area
  double ink_chroma = 0.0;       // mean (max - min channel) over ink pixels
  double ink_luma = 255.0;       // mean luma over ink pixels
};

// Pixels whose largest channel difference to the background exceeds this
// count as ink.
inline constexpr int kInkTolerance = 32;

// Throws Error(kOutOfBounds) when box leaves the image or has no area.
ProposalFeatures ExtractFeatures(const RasterImage& image, const Box& box,
                                 const EdgeMap& edges,
                                 Rgb background = kWhite);

struct ClassifierConfig {
  double saturated_chroma = 50.0;  // ink chroma at or above this is colour
  double dark_luma = 100.0;        // text ink is darker than this
  double text_edge_density = 0.05;
  double text_ink_density = 0.5;
  double bar_fill = 0.9;        // ink-box density of a bar
  int bar_min_side_px = 3;
  int bar_min_long_side_px = 16;
  int dot_max_side_px = 14;
  int dot_min_side_px = 5;
  double dot_fill = 0.5;
  int dot_max_skew_px = 3;      // |width - height|
  int preview_max_side_px = 20;
  double preview_fill = 0.9;
  int x_tick_band_px = 30;      // below the x-axis: ticks, then the label
  int y_label_band_px = 32;     // left of this column: y-axis label
};

struct Classification {
  ObjectClass cls = ObjectClass::kBackground;
  double score = 0.0;
};

Classification Classify(const ProposalFeatures& features,
                        const PlotLayout& layout,
                        const ClassifierConfig& cfg = {});

// Pixels that are dark and unsaturated, as used for axis search.
bool IsAxisInk(Rgb c);

// Axes are the longest horizontal and vertical runs of axis ink; the legend
// is the box of non-background pixels right of the plot area.
// Throws Error(kLayoutNotFound) when either run is shorter than
// min_axis_px.
PlotLayout InferLayout(const RasterImage& image, const EdgeMap& edges,
                       int min_axis_px = 40);

struct DetectorConfig {
  ProposalConfig proposals;
  ClassifierConfig classifier;
  double link_window_px = 50.0;
  // Text pieces of one class link when the gap between them along the
  // reading direction is at most this and they overlap across it.
  double link_gap_px = 4.0;
  double nms_iou = 0.5;
};

struct DetectResult {
  std::vector<Detection> detections;
  std::optional<PlotLayout> layout;
  std::vector<std::string> warnings;
};

DetectResult Detect(const RasterImage& image, const DetectorConfig& cfg = {});

// Greedy per-class suppression; keeps the highest score. Output ordered by
// class, then descending score, then box.
std::vector<Detection> NonMaxSuppression(std::vector<Detection> detections,
                                         double iou_threshold);

std::vector<DetectResult> DetectBatch(std::span<const RasterImage> images,
                                      const DetectorConfig& cfg, int workers);
std::vector<DetectResult> DetectBatchSerial(std::span<const RasterImage> images,
                                            const DetectorConfig& cfg);

}  // namespace plotkit

#endif  // PLOTKIT_DETECTOR_H_
