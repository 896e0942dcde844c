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
#ifndef PLOTKIT_LOSSCHECK_H_
#define PLOTKIT_LOSSCHECK_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plotkit/geometry.h"
#include "plotkit/losses.h"

namespace plotkit {

// A random overlapping box pair with every pair of corresponding or
// competing edges at least `margin` apart, so all losses are smooth there.
std::pair<Box, Box> RandomSmoothPair(uint64_t seed, double margin = 0.05);

struct FocalReference {
  double iou;
  double gamma;
  double expected;
  double actual;
};

// Focal IOU at the reference points (1, 2) -> 0, (0.5, 2) -> 1.559581,
// (0.9, 2) -> 0.380352.
std::vector<FocalReference> FocalReferenceValues();

struct KindCheck {
  LossType type;
  int trials = 0;
  double max_relative_error = 0.0;
};

struct LossCheckReport {
  std::vector<FocalReference> references;
  std::vector<KindCheck> kinds;
  double reference_tolerance = 1e-5;
  double gradient_tolerance = 1e-5;

  bool ok() const;
};

// Central-difference gradient check of every kind in `types` on `trials`
// random smooth pairs (step 1e-4).
LossCheckReport RunLossCheck(std::span<const LossType> types, double gamma,
                             int trials, uint64_t seed = 1);

std::string FormatLossCheck(const LossCheckReport& report);

}  // namespace plotkit

#endif  // PLOTKIT_LOSSCHECK_H_
