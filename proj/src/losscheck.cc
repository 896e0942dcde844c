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
#include "plotkit/losscheck.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "plotkit/error.h"

namespace plotkit {
namespace {

constexpr double kStep = 1e-4;

// Whether all values are pairwise at least margin apart.
bool Separated(std::vector<double> v, double margin) {
  std::sort(v.begin(), v.end());
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] - v[i - 1] < margin) return false;
  }
  return true;
}

}  // namespace

std::pair<Box, Box> RandomSmoothPair(uint64_t seed, double margin) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  while (true) {
    const double w = uniform(20, 200), h = uniform(20, 200);
    const double x = uniform(0, 400), y = uniform(0, 400);
    const Box pred(x, y, x + w, y + h);
    const double tw = w * uniform(0.6, 1.6), th = h * uniform(0.6, 1.6);
    const double tx = x + uniform(-0.4, 0.4) * w;
    const double ty = y + uniform(-0.4, 0.4) * h;
    const Box target(tx, ty, tx + tw, ty + th);
    if (IntersectionArea(pred, target) <= 0.0) continue;
    if (!Separated({pred.x0(), pred.x1(), target.x0(), target.x1()}, margin) ||
        !Separated({pred.y0(), pred.y1(), target.y0(), target.y1()}, margin)) {
      continue;
    }
    return {pred, target};
  }
}

std::vector<FocalReference> FocalReferenceValues() {
  std::vector<FocalReference> refs = {
      {1.0, 2.0, 0.0, 0.0}, {0.5, 2.0, 1.559581, 0.0}, {0.9, 2.0, 0.380352, 0.0}};
  for (auto& r : refs) r.actual = FocalIouFromIou(r.iou, r.gamma);
  return refs;
}

bool LossCheckReport::ok() const {
  for (const auto& r : references) {
    if (!(std::abs(r.actual - r.expected) <= reference_tolerance)) return false;
  }
  for (const auto& k : kinds) {
    if (!(k.max_relative_error < gradient_tolerance)) return false;
  }
  return true;
}

LossCheckReport RunLossCheck(std::span<const LossType> types, double gamma,
                             int trials, uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  }
  if (!(gamma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "gamma must be > 0");
  }
  LossCheckReport report;
  report.references = FocalReferenceValues();
  for (LossType type : types) {
    KindCheck check{type, trials, 0.0};
    LossKind kind;
    kind.type = type;
    kind.gamma = gamma;
    for (int t = 0; t < trials; ++t) {
      const auto [pred, target] =
          RandomSmoothPair(seed * 1000003ULL + static_cast<uint64_t>(t));
      check.max_relative_error = std::max(
          check.max_relative_error, GradientCheck(kind, pred, target, kStep));
    }
    report.kinds.push_back(check);
  }
  return report;
}

std::string FormatLossCheck(const LossCheckReport& report) {
  std::string out;
  char buf[160];
  for (const auto& r : report.references) {
    std::snprintf(buf, sizeof(buf),
                  "fiou(iou=%.2f, gamma=%.2f) = %.6f  expected %.6f  %s\n",
                  r.iou, r.gamma, r.actual, r.expected,
                  std::abs(r.actual - r.expected) <= report.reference_tolerance
                      ? "ok"
                      : "FAIL");
    out += buf;
  }
  for (const auto& k : report.kinds) {
    std::snprintf(buf, sizeof(buf),
                  "%-14s trials %4d  max rel grad error %.3e  %s\n",
                  std::string(LossTypeName(k.type)).c_str(), k.trials,
                  k.max_relative_error,
                  k.max_relative_error < report.gradient_tolerance ? "ok"
                                                                   : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace plotkit
