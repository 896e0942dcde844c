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
#include "plotkit/evaluator.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "plotkit/error.h"
#include "plotkit/json_io.h"
#include "plotkit/parallel.h"

namespace plotkit {
namespace {

std::string Normalize(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double F1(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

struct ScoredTp {
  double score;
  bool tp;
  size_t image;
  size_t index;
};

EvalReport Reduce(std::span<const ImageEval> images,
                  std::span<const double> thresholds,
                  const std::vector<std::vector<MatchResult>>& per_image) {
  EvalReport report;
  report.thresholds.assign(thresholds.begin(), thresholds.end());
  report.num_images = static_cast<int>(images.size());
  std::array<int, kNumObjectClasses> num_gt = {};
  for (const ImageEval& im : images) {
    report.num_detections += static_cast<int>(im.detections.size());
    report.num_gt += static_cast<int>(im.gts.size());
    for (const Annotation& a : im.gts) {
      if (a.cls != ObjectClass::kBackground) ++num_gt[static_cast<int>(a.cls)];
    }
  }
  for (ObjectClass cls : kObjectClasses) {
    if (num_gt[static_cast<int>(cls)] == 0) {
      report.excluded_classes.push_back(cls);
    }
  }
  for (size_t t = 0; t < thresholds.size(); ++t) {
    std::array<std::vector<ScoredTp>, kNumObjectClasses> by_class;
    for (size_t i = 0; i < images.size(); ++i) {
      const MatchResult& m = per_image[i][t];
      for (size_t d = 0; d < images[i].detections.size(); ++d) {
        const Detection& det = images[i].detections[d];
        if (det.cls == ObjectClass::kBackground) continue;
        by_class[static_cast<int>(det.cls)].push_back(
            {det.score, m.true_positive[d], i, d});
      }
    }
    std::array<std::optional<double>, kNumObjectClasses> ap;
    double sum = 0.0;
    int count = 0;
    for (int c = 0; c < kNumObjectClasses; ++c) {
      if (num_gt[c] == 0) continue;
      auto& v = by_class[c];
      std::sort(v.begin(), v.end(), [](const ScoredTp& a, const ScoredTp& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.image != b.image) return a.image < b.image;
        return a.index < b.index;
      });
      std::vector<RankedMatch> ranked;
      ranked.reserve(v.size());
      for (const ScoredTp& s : v) ranked.push_back({s.score, s.tp});
      ap[c] = AveragePrecision(ranked, num_gt[c]);
      sum += *ap[c];
      ++count;
    }
    report.ap.push_back(ap);
    report.mean_ap.push_back(count > 0 ? sum / count : 0.0);
  }
  return report;
}

void CheckThresholds(std::span<const double> thresholds) {
  for (double t : thresholds) {
    if (!(t > 0.0 && t <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "IOU threshold must be in (0, 1], got " + std::to_string(t));
    }
  }
}

std::string Stem(const std::filesystem::path& p) {
  std::string name = p.filename().string();
  for (const char* suffix : {".det.json", ".ann.json", ".table.json"}) {
    const std::string s = suffix;
    if (name.size() > s.size() &&
        name.compare(name.size() - s.size(), s.size(), s) == 0) {
      return name.substr(0, name.size() - s.size());
    }
  }
  return p.stem().string();
}

std::vector<std::filesystem::path> ListFiles(const std::filesystem::path& dir,
                                             const std::string& suffix) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kMissingFile, "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MatchResult MatchDetections(std::span<const Detection> detections,
                            std::span<const Annotation> gts,
                            double iou_threshold) {
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "IOU threshold must be in (0, 1]");
  }
  MatchResult result;
  result.true_positive.assign(detections.size(), false);
  result.matched_gt.assign(detections.size(), std::nullopt);
  for (const Annotation& g : gts) {
    if (g.cls != ObjectClass::kBackground) {
      ++result.num_gt[static_cast<int>(g.cls)];
    }
  }
  std::vector<size_t> order(detections.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return detections[a].score > detections[b].score;
  });
  std::vector<bool> taken(gts.size(), false);
  for (size_t d : order) {
    const Detection& det = detections[d];
    int best = -1;
    double best_iou = 0.0;
    for (size_t g = 0; g < gts.size(); ++g) {
      if (taken[g] || gts[g].cls != det.cls) continue;
      const double iou = Iou(det.box, gts[g].box);
      if (iou >= iou_threshold && iou > best_iou) {
        best = static_cast<int>(g);
        best_iou = iou;
      }
    }
    if (best >= 0) {
      taken[best] = true;
      result.true_positive[d] = true;
      result.matched_gt[d] = best;
    }
  }
  return result;
}

double AveragePrecision(std::span<const RankedMatch> ranked, int num_gt) {
  if (num_gt < 1) {
    throw Error(ErrorCode::kZeroGroundTruth, "AP needs at least one GT");
  }
  const size_t n = ranked.size();
  std::vector<double> precision(n), recall(n);
  int tp = 0;
  for (size_t i = 0; i < n; ++i) {
    tp += ranked[i].true_positive ? 1 : 0;
    precision[i] = static_cast<double>(tp) / static_cast<double>(i + 1);
    recall[i] = static_cast<double>(tp) / num_gt;
  }
  // Envelope: running maximum from the right.
  for (size_t i = n; i-- > 1;) {
    precision[i - 1] = std::max(precision[i - 1], precision[i]);
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (recall[i] > prev_recall) {
      ap += (recall[i] - prev_recall) * precision[i];
      prev_recall = recall[i];
    }
  }
  return ap;
}

TableScore TableF1(const PlotTable& pred, const PlotTable& gt,
                   double rel_tol) {
  if (!(rel_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rel_tol must be positive");
  }
  TableScore s;
  s.predicted_cells = static_cast<int>(pred.CellCount());
  s.gt_cells = static_cast<int>(gt.CellCount());
  std::vector<std::vector<bool>> used(gt.values.size());
  for (size_t r = 0; r < gt.values.size(); ++r) {
    used[r].assign(gt.values[r].size(), false);
  }
  for (size_t pr = 0; pr < pred.values.size(); ++pr) {
    const std::string prow = Normalize(pred.row_headers[pr]);
    for (size_t pc = 0; pc < pred.values[pr].size(); ++pc) {
      const auto& pv = pred.values[pr][pc];
      if (!pv) continue;
      const std::string pcol = Normalize(pred.col_headers[pc]);
      bool found = false;
      for (size_t gr = 0; gr < gt.values.size() && !found; ++gr) {
        if (Normalize(gt.row_headers[gr]) != prow) continue;
        for (size_t gc = 0; gc < gt.values[gr].size() && !found; ++gc) {
          const auto& gv = gt.values[gr][gc];
          if (!gv || used[gr][gc] || Normalize(gt.col_headers[gc]) != pcol) {
            continue;
          }
          if (std::abs(*pv - *gv) <= rel_tol * std::max(std::abs(*gv), 1e-9)) {
            used[gr][gc] = true;
            found = true;
          }
        }
      }
      if (found) ++s.matched;
    }
  }
  s.precision = s.predicted_cells > 0
                    ? static_cast<double>(s.matched) / s.predicted_cells
                    : 0.0;
  s.recall = s.gt_cells > 0 ? static_cast<double>(s.matched) / s.gt_cells : 0.0;
  s.f1 = F1(s.precision, s.recall);
  return s;
}

TableScore CombineTableScores(std::span<const TableScore> scores) {
  TableScore total;
  for (const TableScore& s : scores) {
    total.matched += s.matched;
    total.predicted_cells += s.predicted_cells;
    total.gt_cells += s.gt_cells;
  }
  total.precision = total.predicted_cells > 0
                        ? static_cast<double>(total.matched) /
                              total.predicted_cells
                        : 0.0;
  total.recall = total.gt_cells > 0
                     ? static_cast<double>(total.matched) / total.gt_cells
                     : 0.0;
  total.f1 = F1(total.precision, total.recall);
  return total;
}

EvalReport EvaluateCorpus(std::span<const ImageEval> images,
                          std::span<const double> thresholds, int workers) {
  CheckThresholds(thresholds);
  std::vector<std::vector<MatchResult>> per_image(images.size());
  ParallelFor(images.size(), workers, [&](size_t i) {
    for (double t : thresholds) {
      per_image[i].push_back(
          MatchDetections(images[i].detections, images[i].gts, t));
    }
  });
  return Reduce(images, thresholds, per_image);
}

EvalReport EvaluateCorpusSerial(std::span<const ImageEval> images,
                                std::span<const double> thresholds) {
  CheckThresholds(thresholds);
  std::vector<std::vector<MatchResult>> per_image(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    for (double t : thresholds) {
      per_image[i].push_back(
          MatchDetections(images[i].detections, images[i].gts, t));
    }
  }
  return Reduce(images, thresholds, per_image);
}

EvalReport Evaluate(const std::filesystem::path& pred_dir,
                    const std::filesystem::path& gt_dir,
                    std::span<const double> thresholds, int workers,
                    double table_rel_tol) {
  CheckThresholds(thresholds);
  const auto gt_files = ListFiles(gt_dir, ".ann.json");
  auto pred_files = ListFiles(pred_dir, ".det.json");
  const bool pred_are_annotations = pred_files.empty();
  if (pred_are_annotations) pred_files = ListFiles(pred_dir, ".ann.json");

  struct Pair {
    std::filesystem::path gt, pred;
  };
  std::map<std::string, Pair> pairs;
  for (const auto& f : gt_files) {
    const AnnotationFile a = AnnotationFileFromJson(ReadJsonFile(f));
    pairs[a.image].gt = f;
  }
  for (const auto& f : pred_files) {
    const std::string image =
        pred_are_annotations
            ? AnnotationFileFromJson(ReadJsonFile(f)).image
            : DetectionFileFromJson(ReadJsonFile(f)).image;
    pairs[image].pred = f;
  }
  for (const auto& [image, p] : pairs) {
    if (p.gt.empty()) {
      throw Error(ErrorCode::kMissingFile,
                  "no ground truth for predicted image " + image);
    }
    if (p.pred.empty()) {
      throw Error(ErrorCode::kMissingFile, "no prediction for image " + image);
    }
  }

  std::vector<ImageEval> images;
  std::vector<std::filesystem::path> pred_paths, gt_paths;
  for (const auto& [image, p] : pairs) {
    ImageEval im;
    im.gts = AnnotationFileFromJson(ReadJsonFile(p.gt)).objects;
    if (pred_are_annotations) {
      for (const Annotation& a :
           AnnotationFileFromJson(ReadJsonFile(p.pred)).objects) {
        im.detections.push_back({a.box, a.cls, 1.0});
      }
    } else {
      im.detections = DetectionFileFromJson(ReadJsonFile(p.pred)).detections;
    }
    images.push_back(std::move(im));
    pred_paths.push_back(p.pred);
    gt_paths.push_back(p.gt);
  }
  EvalReport report = EvaluateCorpus(images, thresholds, workers);

  if (!ListFiles(pred_dir, ".table.json").empty()) {
    std::vector<TableScore> scores;
    for (size_t i = 0; i < images.size(); ++i) {
      const auto gt_table = gt_dir / (Stem(gt_paths[i]) + ".table.json");
      if (!std::filesystem::exists(gt_table)) continue;
      const PlotTable gt = PlotTableFromJson(ReadJsonFile(gt_table));
      const auto pred_table = pred_dir / (Stem(pred_paths[i]) + ".table.json");
      const PlotTable pred = std::filesystem::exists(pred_table)
                                 ? PlotTableFromJson(ReadJsonFile(pred_table))
                                 : PlotTable();
      scores.push_back(TableF1(pred, gt, table_rel_tol));
    }
    report.table = CombineTableScores(scores);
  }
  return report;
}

std::string FormatReport(const EvalReport& report) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "images %d  detections %d  ground truth %d\n",
                report.num_images, report.num_detections, report.num_gt);
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-16s", "class");
  out += buf;
  for (double t : report.thresholds) {
    std::snprintf(buf, sizeof(buf), "  AP@%.2f", t);
    out += buf;
  }
  out += "\n";
  for (ObjectClass cls : kObjectClasses) {
    std::snprintf(buf, sizeof(buf), "%-16s",
                  std::string(ClassName(cls)).c_str());
    out += buf;
    for (size_t t = 0; t < report.thresholds.size(); ++t) {
      const auto& ap = report.ap[t][static_cast<int>(cls)];
      if (ap) {
        std::snprintf(buf, sizeof(buf), "  %7.4f", *ap);
      } else {
        std::snprintf(buf, sizeof(buf), "  %7s", "-");
      }
      out += buf;
    }
    out += "\n";
  }
  std::snprintf(buf, sizeof(buf), "%-16s", "mAP");
  out += buf;
  for (double m : report.mean_ap) {
    std::snprintf(buf, sizeof(buf), "  %7.4f", m);
    out += buf;
  }
  out += "\n";
  if (report.table) {
    std::snprintf(buf, sizeof(buf),
                  "table precision %.4f  recall %.4f  f1 %.4f\n",
                  report.table->precision, report.table->recall,
                  report.table->f1);
    out += buf;
  }
  return out;
}

}  // namespace plotkit
