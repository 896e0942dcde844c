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
#ifndef PLOTKIT_TARGETS_H_
#define PLOTKIT_TARGETS_H_

#include <optional>
#include <span>
#include <vector>

#include "plotkit/annotation.h"
#include "plotkit/linking.h"

namespace plotkit {

// Supervision targets of one proposal. regression_box is present iff
// cls != kBackground.
struct ProposalTargets {
  ObjectClass cls = ObjectClass::kBackground;
  std::optional<int> parent_id;
  std::optional<Box> regression_box;
  LinkVector links;
};

struct ClassAssignment {
  ObjectClass cls = ObjectClass::kBackground;
  std::optional<int> parent_id;
};

// Throws Error(kOverlappingAnnotations) if any two boxes overlap.
void ValidateAnnotations(std::span<const Annotation> annotations);

// Class of the (unique) annotation whose half-open box contains the
// proposal's centre, else background.
ClassAssignment AssignClass(const Box& proposal,
                            std::span<const Annotation> annotations);

// Visual parents are regressed to directly. Horizontal text keeps the
// proposal's x-extent and takes the parent's y-extent; rotated y-axis labels
// use the transposed rule.
Box AssignRegressionTarget(const Box& proposal, const Annotation& parent);

// link(i, d) is true iff i's d-neighbour exists and shares i's parent.
std::vector<LinkVector> AssignLinkTargets(
    std::span<const Box> proposals,
    std::span<const std::optional<int>> parents,
    const NeighborIndex& neighbors);

// Runs the three assignments for a whole proposal list.
std::vector<ProposalTargets> AssignTargets(
    std::span<const Box> proposals, std::span<const Annotation> annotations,
    double window_px = kDefaultLinkWindowPx);

}  // namespace plotkit

#endif  // PLOTKIT_TARGETS_H_
