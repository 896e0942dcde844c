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
// Exhaustive reference for single-class AP on tiny instances. Shared by the
// evaluator unit tests and the acceptance binary.
#ifndef PLOTKIT_TESTS_AP_ORACLE_H_
#define PLOTKIT_TESTS_AP_ORACLE_H_

#include <algorithm>
#include <numeric>
#include <vector>

#include "plotkit/geometry.h"

namespace plotkit::testing {

struct ScoredBox {
  Box box;
  double score = 0.0;
};

// Largest number of detections among the first `k` (by rank) that can be
// assigned to distinct GTs with IOU >= threshold. Tries every assignment.
inline int MaxMatched(const std::vector<std::vector<bool>>& ok, size_t k,
                      size_t det, std::vector<bool>& used) {
  if (det == k) return 0;
  int best = MaxMatched(ok, k, det + 1, used);
  for (size_t g = 0; g < used.size(); ++g) {
    if (used[g] || !ok[det][g]) continue;
    used[g] = true;
    best = std::max(best, 1 + MaxMatched(ok, k, det + 1, used));
    used[g] = false;
  }
  return best;
}

// All-point AP: sum over recall steps of the best precision reached at that
// recall or later.
inline double BruteForceAp(std::vector<ScoredBox> dets,
                           const std::vector<Box>& gts, double threshold) {
  std::vector<size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return dets[a].score > dets[b].score;
  });
  std::vector<std::vector<bool>> ok(dets.size(),
                                    std::vector<bool>(gts.size(), false));
  for (size_t r = 0; r < order.size(); ++r) {
    for (size_t g = 0; g < gts.size(); ++g) {
      ok[r][g] = Iou(dets[order[r]].box, gts[g]) >= threshold;
    }
  }
  const double n_gt = static_cast<double>(gts.size());
  std::vector<double> prec, rec;
  for (size_t k = 1; k <= order.size(); ++k) {
    std::vector<bool> used(gts.size(), false);
    const int tp = MaxMatched(ok, k, 0, used);
    prec.push_back(tp / static_cast<double>(k));
    rec.push_back(tp / n_gt);
  }
  double ap = 0.0;
  double last = 0.0;
  for (size_t k = 0; k < rec.size(); ++k) {
    if (rec[k] <= last) continue;
    double best = 0.0;
    for (size_t j = k; j < prec.size(); ++j) best = std::max(best, prec[j]);
    ap += (rec[k] - last) * best;
    last = rec[k];
  }
  return ap;
}

}  // namespace plotkit::testing

#endif  // PLOTKIT_TESTS_AP_ORACLE_H_
