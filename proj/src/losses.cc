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
#include "plotkit/losses.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plotkit/error.h"

namespace plotkit {
namespace {

using Grad = std::array<double, 4>;

Grad Scaled(const Grad& g, double s) {
  return {g[0] * s, g[1] * s, g[2] * s, g[3] * s};
}

Grad Sum(const Grad& a, const Grad& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

// Quotient rule: d(num/den) given value and gradient of both.
Grad QuotientGrad(double num, const Grad& dnum, double den, const Grad& dden) {
  Grad out;
  for (int k = 0; k < 4; ++k) {
    out[k] = (dnum[k] * den - num * dden[k]) / (den * den);
  }
  return out;
}

// Overlap terms shared by every IOU-based loss.
struct IouTerms {
  double iou = 0.0;  // clamped to [epsilon, 1]
  Grad diou = {0, 0, 0, 0};
  double union_area = 0.0;
  Grad dunion = {0, 0, 0, 0};
  // Enclosing box width/height and their partials.
  double cw = 0.0, ch = 0.0;
  Grad dcw = {0, 0, 0, 0}, dch = {0, 0, 0, 0};
};

IouTerms ComputeIouTerms(const Box& p, const Box& t, double epsilon) {
  IouTerms r;
  const double iw = std::min(p.x1(), t.x1()) - std::max(p.x0(), t.x0());
  const double ih = std::min(p.y1(), t.y1()) - std::max(p.y0(), t.y0());
  double inter = 0.0;
  Grad dinter = {0, 0, 0, 0};
  if (iw > 0.0 && ih > 0.0) {
    inter = iw * ih;
    dinter[0] = p.x0() > t.x0() ? -ih : 0.0;
    dinter[1] = p.y0() > t.y0() ? -iw : 0.0;
    dinter[2] = p.x1() < t.x1() ? ih : 0.0;
    dinter[3] = p.y1() < t.y1() ? iw : 0.0;
  }
  const double wp = p.width(), hp = p.height();
  const Grad darea = {-hp, -wp, hp, wp};
  r.union_area = p.area() + t.area() - inter;
  for (int k = 0; k < 4; ++k) r.dunion[k] = darea[k] - dinter[k];

  double iou = r.union_area > 0.0 ? inter / r.union_area : 0.0;
  if (iou < epsilon || r.union_area <= 0.0) {
    r.iou = epsilon;
  } else {
    r.iou = std::min(iou, 1.0);
    r.diou = QuotientGrad(inter, dinter, r.union_area, r.dunion);
  }

  r.cw = std::max(p.x1(), t.x1()) - std::min(p.x0(), t.x0());
  r.ch = std::max(p.y1(), t.y1()) - std::min(p.y0(), t.y0());
  r.dcw = {p.x0() < t.x0() ? -1.0 : 0.0, 0.0, p.x1() > t.x1() ? 1.0 : 0.0,
           0.0};
  r.dch = {0.0, p.y0() < t.y0() ? -1.0 : 0.0, 0.0,
           p.y1() > t.y1() ? 1.0 : 0.0};
  return r;
}

LossValue Giou(const IouTerms& r) {
  LossValue out;
  out.value = 1.0 - r.iou;
  out.gradient = Scaled(r.diou, -1.0);
  const double c = r.cw * r.ch;
  if (c > 0.0) {
    Grad dc;
    for (int k = 0; k < 4; ++k) dc[k] = r.dcw[k] * r.ch + r.dch[k] * r.cw;
    // |C \ (A u B)| / |C| = 1 - U / C
    out.value += 1.0 - r.union_area / c;
    out.gradient =
        Sum(out.gradient, Scaled(QuotientGrad(r.union_area, r.dunion, c, dc),
                                 -1.0));
  }
  return out;
}

// 1 - IOU + rho^2 / c^2
LossValue Diou(const IouTerms& r, const Box& p, const Box& t) {
  LossValue out;
  out.value = 1.0 - r.iou;
  out.gradient = Scaled(r.diou, -1.0);
  const double c2 = r.cw * r.cw + r.ch * r.ch;
  if (c2 > 0.0) {
    const double dx = p.center_x() - t.center_x();
    const double dy = p.center_y() - t.center_y();
    const double rho2 = dx * dx + dy * dy;
    const Grad drho2 = {dx, dy, dx, dy};
    Grad dc2;
    for (int k = 0; k < 4; ++k) {
      dc2[k] = 2.0 * r.cw * r.dcw[k] + 2.0 * r.ch * r.dch[k];
    }
    out.value += rho2 / c2;
    out.gradient = Sum(out.gradient, QuotientGrad(rho2, drho2, c2, dc2));
  }
  return out;
}

// DIOU + alpha * v, differentiating through alpha.
LossValue Ciou(const IouTerms& r, const Box& p, const Box& t) {
  LossValue out = Diou(r, p, t);
  const double wp = p.width(), hp = p.height();
  if (hp <= 0.0 || t.height() <= 0.0) return out;
  constexpr double k = 4.0 / (std::numbers::pi * std::numbers::pi);
  const double delta = std::atan(t.width() / t.height()) - std::atan(wp / hp);
  const double v = k * delta * delta;
  const double norm = wp * wp + hp * hp;
  const double dtheta_dw = hp / norm;
  const double dtheta_dh = -wp / norm;
  const double dv_dtheta = -2.0 * k * delta;
  const Grad dv = {-dv_dtheta * dtheta_dw, -dv_dtheta * dtheta_dh,
                   dv_dtheta * dtheta_dw, dv_dtheta * dtheta_dh};
  const double s = (1.0 - r.iou) + v;
  if (s <= 0.0) return out;
  Grad ds;
  for (int k2 = 0; k2 < 4; ++k2) ds[k2] = -r.diou[k2] + dv[k2];
  Grad dvv;
  for (int k2 = 0; k2 < 4; ++k2) dvv[k2] = 2.0 * v * dv[k2];
  out.value += v * v / s;
  out.gradient = Sum(out.gradient, QuotientGrad(v * v, dvv, s, ds));
  return out;
}

LossValue Fiou(const IouTerms& r, double gamma) {
  const double u = r.iou;
  const double scale = std::pow(1.0 + u, gamma);
  LossValue out;
  out.value = scale * -std::log(u) + 0.0;
  const double dl_du =
      -gamma * std::pow(1.0 + u, gamma - 1.0) * std::log(u) - scale / u;
  out.gradient = Scaled(r.diou, dl_du);
  return out;
}

void Validate(const LossKind& kind) {
  if (!(kind.gamma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "gamma must be > 0");
  }
  if (!(kind.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be > 0");
  }
  if (!(kind.image_size > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "image_size must be > 0");
  }
}

}  // namespace

std::string_view LossTypeName(LossType type) {
  switch (type) {
    case LossType::kSmoothL1: return "smooth_l1";
    case LossType::kOneMinusIou: return "one_minus_iou";
    case LossType::kNegLogIou: return "neg_log_iou";
    case LossType::kGiou: return "giou";
    case LossType::kDiou: return "diou";
    case LossType::kCiou: return "ciou";
    case LossType::kFiou: return "fiou";
    case LossType::kCustom: return "custom";
  }
  return "unknown";
}

std::optional<LossType> ParseLossType(std::string_view name) {
  for (LossType t : kAllLossTypes) {
    if (LossTypeName(t) == name) return t;
  }
  if (name == "sl1") return LossType::kSmoothL1;
  if (name == "iou") return LossType::kOneMinusIou;
  if (name == "neglog") return LossType::kNegLogIou;
  return std::nullopt;
}

LossValue SmoothL1Loss(const Box& pred, const Box& target, double image_size) {
  if (!(image_size > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "image_size must be > 0");
  }
  const std::array<double, 4> p = {pred.x0(), pred.y0(), pred.x1(), pred.y1()};
  const std::array<double, 4> t = {target.x0(), target.y0(), target.x1(),
                                   target.y1()};
  LossValue out;
  for (int k = 0; k < 4; ++k) {
    const double d = (p[k] - t[k]) / image_size;
    if (std::abs(d) < 1.0) {
      out.value += 0.5 * d * d;
      out.gradient[k] = d / image_size;
    } else {
      // The kink |d| == 1 takes this branch.
      out.value += std::abs(d) - 0.5;
      out.gradient[k] = (d > 0.0 ? 1.0 : -1.0) / image_size;
    }
  }
  return out;
}

LossValue ComputeLoss(const LossKind& kind, const Box& pred,
                      const Box& target) {
  Validate(kind);
  if (kind.type == LossType::kSmoothL1) {
    return SmoothL1Loss(pred, target, kind.image_size);
  }
  const IouTerms r = ComputeIouTerms(pred, target, kind.epsilon);
  switch (kind.type) {
    case LossType::kOneMinusIou:
      return {1.0 - r.iou, Scaled(r.diou, -1.0)};
    case LossType::kNegLogIou:
      return {-std::log(r.iou), Scaled(r.diou, -1.0 / r.iou)};
    case LossType::kGiou:
      return Giou(r);
    case LossType::kDiou:
      return Diou(r, pred, target);
    case LossType::kCiou:
      return Ciou(r, pred, target);
    case LossType::kFiou:
      return Fiou(r, kind.gamma);
    case LossType::kCustom: {
      const LossValue sl1 = SmoothL1Loss(pred, target, kind.image_size);
      const LossValue fiou = Fiou(r, kind.gamma);
      return {sl1.value + fiou.value, Sum(sl1.gradient, fiou.gradient)};
    }
    case LossType::kSmoothL1:
      break;
  }
  return {};
}

double FocalIouFromIou(double iou, double gamma) {
  return std::pow(1.0 + iou, gamma) * -std::log(iou) + 0.0;
}

double NegLogIouFromIou(double iou) { return -std::log(iou) + 0.0; }

double GradientCheck(const LossKind& kind, const Box& pred, const Box& target,
                     double step) {
  if (!(step > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "step must be > 0");
  }
  const LossValue analytic = ComputeLoss(kind, pred, target);
  const std::array<double, 4> p = {pred.x0(), pred.y0(), pred.x1(), pred.y1()};
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    auto plus = p, minus = p;
    plus[k] += step;
    minus[k] -= step;
    const double fp =
        ComputeLoss(kind, Box(plus[0], plus[1], plus[2], plus[3]), target)
            .value;
    const double fm =
        ComputeLoss(kind, Box(minus[0], minus[1], minus[2], minus[3]), target)
            .value;
    const double numeric = (fp - fm) / (2.0 * step);
    const double a = analytic.gradient[k];
    worst = std::max(worst, std::abs(a - numeric) / std::max(1.0, std::abs(a)));
  }
  return worst;
}

}  // namespace plotkit
