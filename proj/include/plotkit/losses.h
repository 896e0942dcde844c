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
#ifndef PLOTKIT_LOSSES_H_
#define PLOTKIT_LOSSES_H_

#include <array>
#include <optional>
#include <string_view>

#include "plotkit/geometry.h"

namespace plotkit {

// Bounding-box regression losses with analytic gradients with respect to the
// predicted box coordinates (x0, y0, x1, y1).
enum class LossType {
  kSmoothL1,
  kOneMinusIou,
  kNegLogIou,
  kGiou,
  kDiou,
  kCiou,
  kFiou,
  kCustom,  // smooth-l1 + focal IOU
};

inline constexpr std::array<LossType, 8> kAllLossTypes = {
    LossType::kSmoothL1, LossType::kOneMinusIou, LossType::kNegLogIou,
    LossType::kGiou,     LossType::kDiou,        LossType::kCiou,
    LossType::kFiou,     LossType::kCustom};

std::string_view LossTypeName(LossType type);
std::optional<LossType> ParseLossType(std::string_view name);

struct LossKind {
  LossType type = LossType::kFiou;
  // Focusing exponent of the focal IOU term. Must be > 0.
  double gamma = 2.0;
  // IOU is clamped to [epsilon, 1] before any logarithm.
  double epsilon = 1e-7;
  // Normalizer for the smooth-l1 part of kSmoothL1 and kCustom.
  double image_size = 650.0;
};

struct LossValue {
  double value = 0.0;
  std::array<double, 4> gradient = {0.0, 0.0, 0.0, 0.0};
};

// Sum over the four coordinates of h((pred_k - target_k) / image_size) with
// h(d) = 0.5 d^2 for |d| < 1 and |d| - 0.5 otherwise.
LossValue SmoothL1Loss(const Box& pred, const Box& target, double image_size);

// Any LossType, including kSmoothL1 (which uses kind.image_size).
// Throws Error(kInvalidArgument) for gamma <= 0, epsilon <= 0 or
// image_size <= 0.
LossValue ComputeLoss(const LossKind& kind, const Box& pred,
                      const Box& target);

// Scalar forms used for curve analysis.
double FocalIouFromIou(double iou, double gamma);
double NegLogIouFromIou(double iou);

// Max over the four coordinates of
//   |analytic - central difference| / max(1, |analytic|).
double GradientCheck(const LossKind& kind, const Box& pred, const Box& target,
                     double step);

}  // namespace plotkit

#endif  // PLOTKIT_LOSSES_H_
