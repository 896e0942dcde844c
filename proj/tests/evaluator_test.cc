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

#include <filesystem>
#include <random>

#include <gtest/gtest.h>
#include <unistd.h>

#include "ap_oracle.h"
#include "plotkit/error.h"
#include "plotkit/json_io.h"
#include "plotkit/synth.h"

namespace plotkit {
namespace {

namespace fs = std::filesystem;

Annotation Gt(int id, Box box, ObjectClass cls = ObjectClass::kBar) {
  Annotation a;
  a.object_id = id;
  a.cls = cls;
  a.box = box;
  return a;
}

Detection Det(Box box, double score, ObjectClass cls = ObjectClass::kBar) {
  return {box, cls, score};
}

TEST(MatchDetectionsTest, Examples) {
  const std::vector<Annotation> gts = {Gt(1, Box(0, 0, 100, 100))};
  // IOU 0.95.
  std::vector<Detection> dets = {Det(Box(0, 0, 95, 100), 0.9)};
  EXPECT_TRUE(MatchDetections(dets, gts, 0.9).true_positive[0]);
  // IOU 0.85.
  dets = {Det(Box(0, 0, 85, 100), 0.9)};
  EXPECT_FALSE(MatchDetections(dets, gts, 0.9).true_positive[0]);
  // Two detections on one GT: higher score wins regardless of list order.
  dets = {Det(Box(0, 0, 100, 100), 0.3), Det(Box(0, 0, 98, 100), 0.8)};
  const MatchResult m = MatchDetections(dets, gts, 0.5);
  EXPECT_FALSE(m.true_positive[0]);
  EXPECT_TRUE(m.true_positive[1]);
  EXPECT_EQ(m.matched_gt[1], 0);
  EXPECT_FALSE(m.matched_gt[0].has_value());
}

TEST(MatchDetectionsTest, ClassMustAgree) {
  const std::vector<Annotation> gts = {Gt(1, Box(0, 0, 10, 10))};
  const std::vector<Detection> dets = {
      Det(Box(0, 0, 10, 10), 1.0, ObjectClass::kDotLine)};
  EXPECT_FALSE(MatchDetections(dets, gts, 0.5).true_positive[0]);
}

TEST(MatchDetectionsTest, RejectsBadThreshold) {
  EXPECT_THROW(MatchDetections({}, {}, 0.0), Error);
  EXPECT_THROW(MatchDetections({}, {}, 1.5), Error);
}

TEST(AveragePrecisionTest, Examples) {
  const std::vector<RankedMatch> all = {{0.9, true}, {0.8, true}};
  EXPECT_DOUBLE_EQ(AveragePrecision(all, 2), 1.0);
  EXPECT_DOUBLE_EQ(AveragePrecision({}, 2), 0.0);
  const std::vector<RankedMatch> mixed = {{0.9, true}, {0.8, false},
                                          {0.7, true}};
  EXPECT_NEAR(AveragePrecision(mixed, 2), 0.5 + 0.5 * 2.0 / 3.0, 1e-12);
  try {
    AveragePrecision(all, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroGroundTruth);
  }
}

std::vector<RankedMatch> RandomRanking(std::mt19937& rng, int n) {
  std::vector<RankedMatch> r;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i) r.push_back({1.0 - i * 0.01, u(rng) < 0.6});
  return r;
}

TEST(AveragePrecisionTest, FlippingTpNeverIncreasesAp) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    auto r = RandomRanking(rng, 1 + trial % 12);
    const int num_gt = 12;
    const double before = AveragePrecision(r, num_gt);
    for (auto& m : r) {
      if (!m.true_positive) continue;
      m.true_positive = false;
      EXPECT_LE(AveragePrecision(r, num_gt), before + 1e-15);
      m.true_positive = true;
    }
  }
}

Box RandomBox(std::mt19937& rng, int extent) {
  std::uniform_int_distribution<int> pos(0, extent - 12);
  std::uniform_int_distribution<int> side(4, 12);
  const int x = pos(rng), y = pos(rng);
  return Box(x, y, x + side(rng), y + side(rng));
}

// Random instances with pairwise-disjoint GT boxes (rendered plot objects
// never overlap), compared against the exhaustive assignment oracle.
TEST(EvaluateCorpusTest, MatchesBruteForceOracle) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Box> gt_boxes;
    const int n_gt = 1 + trial % 4;
    while (static_cast<int>(gt_boxes.size()) < n_gt) {
      const Box b = RandomBox(rng, 40);
      bool disjoint = true;
      for (const Box& g : gt_boxes) disjoint = disjoint && !Overlaps(b, g);
      if (disjoint) gt_boxes.push_back(b);
    }
    ImageEval image;
    std::vector<testing::ScoredBox> oracle_dets;
    for (size_t i = 0; i < gt_boxes.size(); ++i) {
      image.gts.push_back(Gt(static_cast<int>(i), gt_boxes[i]));
    }
    const int n_det = (trial / 4) % 5;
    for (int i = 0; i < n_det; ++i) {
      Box b = RandomBox(rng, 40);
      if (i % 2 == 0) {
        const Box& g = gt_boxes[rng() % gt_boxes.size()];
        b = g.Translated(static_cast<int>(rng() % 3) - 1,
                         static_cast<int>(rng() % 3) - 1);
      }
      const double s = score(rng);
      image.detections.push_back(Det(b, s));
      oracle_dets.push_back({b, s});
    }
    const std::vector<double> thresholds = {0.9, 0.75, 0.5};
    const EvalReport report = EvaluateCorpusSerial({&image, 1}, thresholds);
    const int bar = static_cast<int>(ObjectClass::kBar);
    for (size_t t = 0; t < thresholds.size(); ++t) {
      ASSERT_TRUE(report.ap[t][bar].has_value());
      EXPECT_NEAR(*report.ap[t][bar],
                  testing::BruteForceAp(oracle_dets, gt_boxes, thresholds[t]),
                  1e-12)
          << "trial " << trial;
    }
  }
}

ImageEval PlotAsEval(const GeneratedPlot& plot, double dx, double dy) {
  ImageEval e;
  e.gts = plot.annotations;
  for (const Annotation& a : plot.annotations) {
    e.detections.push_back(Det(a.box.Translated(dx, dy), 1.0, a.cls));
  }
  return e;
}

TEST(EvaluateCorpusTest, IdentityAndThresholdMonotonicity) {
  std::vector<ImageEval> exact, shifted;
  for (int i = 0; i < 6; ++i) {
    const GeneratedPlot plot = GeneratePlot(CorpusSpec(5, i));
    exact.push_back(PlotAsEval(plot, 0, 0));
    shifted.push_back(PlotAsEval(plot, 3, 2));
  }
  const std::vector<double> thresholds = {0.9, 0.75, 0.5};
  const EvalReport id = EvaluateCorpus(exact, thresholds, 2);
  for (double m : id.mean_ap) EXPECT_DOUBLE_EQ(m, 1.0);
  const EvalReport sh = EvaluateCorpus(shifted, thresholds, 2);
  EXPECT_LE(sh.mean_ap[0], sh.mean_ap[1]);
  EXPECT_LE(sh.mean_ap[1], sh.mean_ap[2]);
  EXPECT_LT(sh.mean_ap[0], 1.0);
}

TEST(EvaluateCorpusTest, ExcludesClassesWithoutGroundTruth) {
  ImageEval e;
  e.gts = {Gt(1, Box(0, 0, 10, 10))};
  e.detections = {Det(Box(0, 0, 10, 10), 0.5),
                  Det(Box(20, 20, 30, 30), 0.5, ObjectClass::kPlotTitle)};
  const std::vector<double> thresholds = {0.5};
  const EvalReport r = EvaluateCorpusSerial({&e, 1}, thresholds);
  EXPECT_DOUBLE_EQ(r.mean_ap[0], 1.0);
  EXPECT_EQ(r.excluded_classes.size(), 8u);
  EXPECT_FALSE(r.ap[0][static_cast<int>(ObjectClass::kPlotTitle)].has_value());
}

TEST(EvaluateCorpusTest, EmptyPredictionsScoreZero) {
  ImageEval e;
  e.gts = {Gt(1, Box(0, 0, 10, 10))};
  const std::vector<double> thresholds = {0.9, 0.5};
  const EvalReport r = EvaluateCorpusSerial({&e, 1}, thresholds);
  EXPECT_DOUBLE_EQ(r.mean_ap[0], 0.0);
  EXPECT_DOUBLE_EQ(r.mean_ap[1], 0.0);
}

TEST(EvaluateCorpusTest, ParallelEqualsSerial) {
  std::vector<ImageEval> images;
  for (int i = 0; i < 8; ++i) {
    images.push_back(PlotAsEval(GeneratePlot(CorpusSpec(6, i)), i % 3, 1));
  }
  const std::vector<double> thresholds = {0.9, 0.75, 0.5};
  const EvalReport a = EvaluateCorpus(images, thresholds, 4);
  const EvalReport b = EvaluateCorpusSerial(images, thresholds);
  EXPECT_EQ(DumpJson(ToJson(a)), DumpJson(ToJson(b)));
}

TEST(EvaluateCorpusTest, ScoresAreRankOnly) {
  std::vector<ImageEval> images;
  for (int i = 0; i < 4; ++i) {
    images.push_back(PlotAsEval(GeneratePlot(CorpusSpec(8, i)), 2, 0));
  }
  std::mt19937 rng(2);
  for (auto& img : images) {
    for (auto& d : img.detections) d.score = 0.05 + 0.9 * (rng() % 1000) / 1e3;
  }
  auto rescaled = images;
  for (auto& img : rescaled) {
    for (auto& d : img.detections) d.score = d.score * d.score * 0.5;
  }
  const std::vector<double> thresholds = {0.75};
  EXPECT_DOUBLE_EQ(EvaluateCorpusSerial(images, thresholds).mean_ap[0],
                   EvaluateCorpusSerial(rescaled, thresholds).mean_ap[0]);
}

PlotTable FourCells() {
  PlotTable t({"2000", "2001"}, {"Peru", "Chile"});
  t.values = {{10.0, 20.0}, {30.0, 40.0}};
  return t;
}

TEST(TableF1Test, Examples) {
  const PlotTable gt = FourCells();
  TableScore s = TableF1(gt, gt);
  EXPECT_DOUBLE_EQ(s.f1, 1.0);
  PlotTable off = gt;
  off.values[1][0] = 33.0;
  s = TableF1(off, gt);
  EXPECT_DOUBLE_EQ(s.precision, 0.75);
  EXPECT_DOUBLE_EQ(s.recall, 0.75);
  EXPECT_DOUBLE_EQ(s.f1, 0.75);
  s = TableF1(PlotTable(), gt);
  EXPECT_DOUBLE_EQ(s.precision, 0.0);
  EXPECT_DOUBLE_EQ(s.recall, 0.0);
  EXPECT_DOUBLE_EQ(s.f1, 0.0);
}

TEST(TableF1Test, HeadersAreCaseInsensitiveAndTrimmed) {
  PlotTable pred = FourCells();
  pred.row_headers[0] = " 2000 ";
  pred.col_headers[1] = "CHILE";
  EXPECT_DOUBLE_EQ(TableF1(pred, FourCells()).f1, 1.0);
}

TEST(TableF1Test, SwappingArgumentsSwapsPrecisionAndRecall) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    PlotTable a = FourCells(), b = FourCells();
    for (auto* t : {&a, &b}) {
      for (auto& row : t->values) {
        for (auto& v : row) {
          const int r = rng() % 4;
          if (r == 0) v.reset();
          if (r == 1) v = *v * 1.5;
        }
      }
    }
    const TableScore ab = TableF1(a, b), ba = TableF1(b, a);
    EXPECT_DOUBLE_EQ(ab.precision, ba.recall);
    EXPECT_DOUBLE_EQ(ab.recall, ba.precision);
    EXPECT_DOUBLE_EQ(ab.f1, ba.f1);
  }
}

TEST(EvaluateTest, IdentityThroughFiles) {
  const fs::path dir = fs::temp_directory_path() /
                       ("plotkit_eval_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  GenCorpus(4, 21, dir, 1);
  const std::vector<double> thresholds = {0.9, 0.75, 0.5};
  const EvalReport r = Evaluate(dir, dir, thresholds, 2);
  EXPECT_EQ(r.num_images, 4);
  for (double m : r.mean_ap) EXPECT_DOUBLE_EQ(m, 1.0);
  ASSERT_TRUE(r.table.has_value());
  EXPECT_DOUBLE_EQ(r.table->f1, 1.0);
  fs::remove_all(dir);
}

TEST(EvaluateTest, MissingDirectory) {
  const std::vector<double> thresholds = {0.5};
  try {
    Evaluate("/nonexistent/pred", "/nonexistent/gt", thresholds);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingFile);
  }
}

}  // namespace
}  // namespace plotkit
