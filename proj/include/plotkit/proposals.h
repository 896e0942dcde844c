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
#ifndef PLOTKIT_PROPOSALS_H_
#define PLOTKIT_PROPOSALS_H_

#include <span>
#include <vector>

#include "plotkit/contours.h"
#include "plotkit/edges.h"
#include "plotkit/geometry.h"
#include "plotkit/image.h"

namespace plotkit {

struct ProposalConfig {
  int threshold = 8;  // Laplacian edge threshold, 0..255
  int min_side_px = 3;
  int max_proposals = 500;
};

struct Proposal {
  Box box;
  int source_contour = 0;

  friend bool operator==(const Proposal&, const Proposal&) = default;
};

struct ProposalResult {
  EdgeMap edges;
  std::vector<Proposal> proposals;
};

// Minimal up-right rectangle of the contour: min/max over its points, with
// the max side exclusive.
Box BoundingRect(const Contour& contour);

// edges -> contours -> bounding rectangles. Boxes with a side shorter than
// min_side_px are dropped, identical boxes deduplicated (lowest contour id
// kept), and the list is ordered by descending area (ties by contour id) and
// truncated to max_proposals.
std::vector<Proposal> ProposeRegions(const RasterImage& image,
                                     const ProposalConfig& cfg = {});

// Same, also returning the edge map for downstream feature extraction.
ProposalResult ProposeRegionsWithEdges(const RasterImage& image,
                                       const ProposalConfig& cfg = {});

// One proposal list per image; images are distributed over OpenMP threads.
std::vector<std::vector<Proposal>> ProposeRegionsBatch(
    std::span<const RasterImage> images, const ProposalConfig& cfg,
    int workers);
std::vector<std::vector<Proposal>> ProposeRegionsBatchSerial(
    std::span<const RasterImage> images, const ProposalConfig& cfg);

}  // namespace plotkit

#endif  // PLOTKIT_PROPOSALS_H_
