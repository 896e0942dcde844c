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
#include "plotkit/proposals.h"

#include <algorithm>
#include <climits>
#include <set>
#include <tuple>

#include "plotkit/error.h"
#include "plotkit/parallel.h"

namespace plotkit {

Box BoundingRect(const Contour& contour) {
  int x0 = INT_MAX, y0 = INT_MAX, x1 = INT_MIN, y1 = INT_MIN;
  for (const PixelPoint& p : contour.points) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  return Box(x0, y0, x1 + 1, y1 + 1);
}

ProposalResult ProposeRegionsWithEdges(const RasterImage& image,
                                       const ProposalConfig& cfg) {
  if (cfg.min_side_px < 1) {
    throw Error(ErrorCode::kInvalidArgument, "min_side_px must be >= 1");
  }
  if (cfg.max_proposals < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_proposals must be >= 0");
  }
  ProposalResult result{LaplacianEdges(image, cfg.threshold), {}};
  const std::vector<Contour> contours = TraceContours(result.edges);

  std::vector<Proposal> all;
  std::set<std::tuple<double, double, double, double>> seen;
  for (const Contour& c : contours) {
    const Box box = BoundingRect(c);
    if (box.width() < cfg.min_side_px || box.height() < cfg.min_side_px) {
      continue;
    }
    if (!seen.emplace(box.x0(), box.y0(), box.x1(), box.y1()).second) continue;
    all.push_back({box, c.id});
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Proposal& a, const Proposal& b) {
                     return a.box.area() > b.box.area();
                   });
  if (all.size() > static_cast<size_t>(cfg.max_proposals)) {
    all.resize(static_cast<size_t>(cfg.max_proposals));
  }
  result.proposals = std::move(all);
  return result;
}

std::vector<Proposal> ProposeRegions(const RasterImage& image,
                                     const ProposalConfig& cfg) {
  return ProposeRegionsWithEdges(image, cfg).proposals;
}

std::vector<std::vector<Proposal>> ProposeRegionsBatch(
    std::span<const RasterImage> images, const ProposalConfig& cfg,
    int workers) {
  std::vector<std::vector<Proposal>> out(images.size());
  ParallelFor(images.size(), workers,
              [&](size_t i) { out[i] = ProposeRegions(images[i], cfg); });
  return out;
}

std::vector<std::vector<Proposal>> ProposeRegionsBatchSerial(
    std::span<const RasterImage> images, const ProposalConfig& cfg) {
  std::vector<std::vector<Proposal>> out;
  out.reserve(images.size());
  for (const RasterImage& img : images) out.push_back(ProposeRegions(img, cfg));
  return out;
}

}  // namespace plotkit
