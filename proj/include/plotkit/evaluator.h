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
#ifndef PLOTKIT_EVALUATOR_H_
#define PLOTKIT_EVALUATOR_H_

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plotkit/annotation.h"
#include "plotkit/detection.h"
#include "plotkit/table.h"

namespace plotkit {

inline const std::vector<double> kDefaultIouThresholds = {0.9, 0.75, 0.5};

struct MatchResult {
  // Indexed like the input detections.
  std::vector<bool> true_positive;
  std::vector<std::optional<int>> matched_gt;  // index into the GT list
  std::array<int, kNumObjectClasses> num_gt = {};
};

// Per class, detections are visited by descending score (input order breaks
// ties) and each takes the unmatched GT of its class with the highest IOU at
// or above the threshold (lowest index breaks ties).
// Throws Error(kInvalidArgument) unless 0 < iou_threshold <= 1.
MatchResult MatchDetections(std::span<const Detection> detections,
                            std::span<const Annotation> gts,
                            double iou_threshold);

struct RankedMatch {
  double score = 0.0;
  bool true_positive = false;
};

// All-point interpolated AP of a ranked TP/FP sequence (already in rank
// order). Throws Error(kZeroGroundTruth) when num_gt < 1.
double AveragePrecision(std::span<const RankedMatch> ranked, int num_gt);

struct TableScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int matched = 0;
  int predicted_cells = 0;
  int gt_cells = 0;
};

// Header match is case-insensitive after trimming; values match when
// |pred - gt| <= rel_tol * max(|gt|, 1e-9).
TableScore TableF1(const PlotTable& pred, const PlotTable& gt,
                   double rel_tol = 0.02);

// Precision/recall/F1 from summed counts.
TableScore CombineTableScores(std::span<const TableScore> scores);

struct ImageEval {
  std::vector<Detection> detections;
  std::vector<Annotation> gts;
};

struct EvalReport {
  std::vector<double> thresholds;
  // ap[t][class]; nullopt for classes without ground truth.
  std::vector<std::array<std::optional<double>, kNumObjectClasses>> ap;
  std::vector<double> mean_ap;
  std::vector<ObjectClass> excluded_classes;
  int num_images = 0;
  int num_detections = 0;
  int num_gt = 0;
  std::optional<TableScore> table;
};

EvalReport EvaluateCorpus(std::span<const ImageEval> images,
                          std::span<const double> thresholds, int workers);
EvalReport EvaluateCorpusSerial(std::span<const ImageEval> images,
                                std::span<const double> thresholds);

// Pairs files by their "image" field. Predictions are *.det.json, or
// *.ann.json (scored 1.0) when the directory holds no detection files.
// When the prediction directory holds *.table.json files, table scores are
// computed against the GT tables of the same stem.
// Throws Error(kMissingFile) or Error(kSchemaMismatch).
EvalReport Evaluate(const std::filesystem::path& pred_dir,
                    const std::filesystem::path& gt_dir,
                    std::span<const double> thresholds, int workers = 1,
                    double table_rel_tol = 0.02);

std::string FormatReport(const EvalReport& report);

}  // namespace plotkit

#endif  // PLOTKIT_EVALUATOR_H_
