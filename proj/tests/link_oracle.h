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
#ifndef PLOTKIT_TESTS_LINK_ORACLE_H_
#define PLOTKIT_TESTS_LINK_ORACLE_H_

#include <vector>

#include "plotkit/geometry.h"
#include "plotkit/linking.h"

namespace plotkit::testing {

// Transitive closure by repeated relaxation over the undirected link graph.
inline std::vector<Box> ClosureOracle(const std::vector<Box>& boxes,
                               const std::vector<LinkVector>& links,
                               const NeighborIndex& neighbors) {
  const size_t n = boxes.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (Direction d : kAllDirections) {
      if (links[i][d] && neighbors[i][d]) {
        reach[i][*neighbors[i][d]] = true;
        reach[*neighbors[i][d]][i] = true;
      }
    }
  }
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::vector<Box> out;
  std::vector<bool> done(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    Box b = boxes[i];
    for (size_t j = 0; j < n; ++j) {
      if (reach[i][j]) {
        b = Enclosing(b, boxes[j]);
        done[j] = true;
      }
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace plotkit::testing

#endif  // PLOTKIT_TESTS_LINK_ORACLE_H_
