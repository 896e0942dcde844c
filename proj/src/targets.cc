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
#include "plotkit/targets.h"

#include "plotkit/error.h"

namespace plotkit {
namespace {

ClassAssignment AssignClassUnchecked(const Box& proposal,
                                     std::span<const Annotation> annotations) {
  const double cx = proposal.center_x();
  const double cy = proposal.center_y();
  for (const Annotation& a : annotations) {
    if (a.box.Contains(cx, cy)) return {a.cls, a.object_id};
  }
  return {};
}

}  // namespace

void ValidateAnnotations(std::span<const Annotation> annotations) {
  for (size_t i = 0; i < annotations.size(); ++i) {
    for (size_t j = i + 1; j < annotations.size(); ++j) {
      if (Overlaps(annotations[i].box, annotations[j].box)) {
        throw Error(ErrorCode::kOverlappingAnnotations,
                    "objects " + std::to_string(annotations[i].object_id) +
                        " and " + std::to_string(annotations[j].object_id) +
                        " overlap");
      }
    }
  }
}

ClassAssignment AssignClass(const Box& proposal,
                            std::span<const Annotation> annotations) {
  ValidateAnnotations(annotations);
  return AssignClassUnchecked(proposal, annotations);
}

Box AssignRegressionTarget(const Box& proposal, const Annotation& parent) {
  if (!IsTextual(parent.cls)) return parent.box;
  if (parent.cls == ObjectClass::kYAxisLabel) {
    return Box(parent.box.x0(), proposal.y0(), parent.box.x1(), proposal.y1());
  }
  return Box(proposal.x0(), parent.box.y0(), proposal.x1(), parent.box.y1());
}

std::vector<LinkVector> AssignLinkTargets(
    std::span<const Box> proposals,
    std::span<const std::optional<int>> parents,
    const NeighborIndex& neighbors) {
  if (parents.size() != proposals.size() ||
      neighbors.size() != proposals.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "proposals, parents and neighbors must have equal length");
  }
  std::vector<LinkVector> links(proposals.size());
  for (size_t i = 0; i < proposals.size(); ++i) {
    if (!parents[i].has_value()) continue;
    for (Direction d : kAllDirections) {
      const auto& j = neighbors[i][d];
      if (j.has_value() && parents[*j] == parents[i]) links[i][d] = true;
    }
  }
  return links;
}

std::vector<ProposalTargets> AssignTargets(
    std::span<const Box> proposals, std::span<const Annotation> annotations,
    double window_px) {
  ValidateAnnotations(annotations);
  std::vector<ProposalTargets> out(proposals.size());
  std::vector<std::optional<int>> parents(proposals.size());
  for (size_t i = 0; i < proposals.size(); ++i) {
    const ClassAssignment a = AssignClassUnchecked(proposals[i], annotations);
    out[i].cls = a.cls;
    out[i].parent_id = a.parent_id;
    parents[i] = a.parent_id;
    if (a.parent_id.has_value()) {
      for (const Annotation& ann : annotations) {
        if (ann.object_id == *a.parent_id) {
          out[i].regression_box = AssignRegressionTarget(proposals[i], ann);
          break;
        }
      }
    }
  }
  const NeighborIndex neighbors = FindNeighbors(proposals, window_px);
  const auto links = AssignLinkTargets(proposals, parents, neighbors);
  for (size_t i = 0; i < proposals.size(); ++i) out[i].links = links[i];
  return out;
}

}  // namespace plotkit
