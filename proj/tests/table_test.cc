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
#include "plotkit/table.h"

#include <gtest/gtest.h>

#include "plotkit/error.h"
#include "plotkit/synth.h"

namespace plotkit {
namespace {

TableObject Tick(ObjectClass cls, double cx, double cy, std::string text) {
  return {cls, Box(cx - 5, cy - 3, cx + 5, cy + 3), std::move(text), kBlack,
          1.0};
}

TableObject Bar(double x0, double top, double x1, Rgb fill) {
  return {ObjectClass::kBar, Box(x0, top, x1, 200), "", fill, 1.0};
}

TEST(BuildScaleTest, TwoTicks) {
  const std::vector<TableObject> objs = {
      Tick(ObjectClass::kYAxisTicks, 20, 100, "20"),
      Tick(ObjectClass::kYAxisTicks, 20, 150, "10")};
  const TickScale s = BuildScale(objs);
  ASSERT_EQ(s.ticks.size(), 2u);
  EXPECT_EQ(s.ticks[0].pixel, 150);
  EXPECT_EQ(s.ticks[0].value, 10);
  EXPECT_EQ(s.ticks[1].pixel, 100);
  EXPECT_EQ(s.ticks[1].value, 20);
}

TEST(BuildScaleTest, Errors) {
  std::vector<TableObject> objs = {Tick(ObjectClass::kYAxisTicks, 20, 100, "20"),
                                   Tick(ObjectClass::kYAxisTicks, 20, 60, "n/a")};
  try {
    BuildScale(objs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientTicks);
  }
  objs = {Tick(ObjectClass::kYAxisTicks, 20, 100, "20"),
          Tick(ObjectClass::kYAxisTicks, 20, 150, "10"),
          Tick(ObjectClass::kYAxisTicks, 20, 50, "15")};
  try {
    BuildScale(objs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonotonicScale);
  }
}

TEST(InterpolateValueTest, Examples) {
  TickScale s;
  s.ticks = {{150, 10}, {100, 20}};
  EXPECT_DOUBLE_EQ(InterpolateValue(120, s), 16.0);
  EXPECT_DOUBLE_EQ(InterpolateValue(100, s), 20.0);
  EXPECT_DOUBLE_EQ(InterpolateValue(75, s), 25.0);
  EXPECT_DOUBLE_EQ(InterpolateValue(175, s), 5.0);
}

TEST(InterpolateValueTest, PiecewiseSegments) {
  TickScale s;
  s.ticks = {{200, 0}, {150, 10}, {50, 20}};
  EXPECT_DOUBLE_EQ(InterpolateValue(175, s), 5.0);
  EXPECT_DOUBLE_EQ(InterpolateValue(100, s), 15.0);
  EXPECT_DOUBLE_EQ(InterpolateValue(0, s), 25.0);
}

TEST(ParseNumberTest, Formats) {
  EXPECT_EQ(ParseNumber("2.5"), 2.5);
  EXPECT_EQ(ParseNumber("1,200"), 1200.0);
  EXPECT_EQ(ParseNumber("45%"), 45.0);
  EXPECT_FALSE(ParseNumber("Jan").has_value());
  EXPECT_FALSE(ParseNumber("").has_value());
}

std::vector<TableObject> TwoSeriesPlot() {
  const Rgb red{214, 39, 40}, blue{31, 119, 180};
  return {Tick(ObjectClass::kYAxisTicks, 20, 200, "0"),
          Tick(ObjectClass::kYAxisTicks, 20, 100, "50"),
          Tick(ObjectClass::kXAxisTicks, 110, 215, "2001"),
          Tick(ObjectClass::kXAxisTicks, 60, 215, "2000"),
          {ObjectClass::kLegendPreview, Box(300, 40, 312, 52), "", blue, 1},
          {ObjectClass::kLegendPreview, Box(300, 76, 312, 88), "", red, 1},
          {ObjectClass::kLegendLabel, Box(320, 43, 350, 50), "Peru", kBlack, 1},
          {ObjectClass::kLegendLabel, Box(320, 79, 350, 86), "Chile", kBlack, 1},
          Bar(50, 150, 58, blue),   // 2000 Peru = 25
          Bar(62, 120, 70, red),    // 2000 Chile = 40
          Bar(100, 160, 108, blue),  // 2001 Peru = 20
          Bar(112, 100, 120, red)};  // 2001 Chile = 50
}

PlotLayout SimpleLayout() {
  PlotLayout l;
  l.x_axis_row = 203;
  l.y_axis_col = 40;
  l.plot_area = Box(41, 30, 280, 203);
  return l;
}

TEST(BuildTableTest, TwoSeries) {
  const PlotTable t = BuildTable(TwoSeriesPlot(), SimpleLayout());
  EXPECT_EQ(t.row_headers, (std::vector<std::string>{"2000", "2001"}));
  EXPECT_EQ(t.col_headers, (std::vector<std::string>{"Peru", "Chile"}));
  EXPECT_DOUBLE_EQ(*t.values[0][0], 25);
  EXPECT_DOUBLE_EQ(*t.values[0][1], 40);
  EXPECT_DOUBLE_EQ(*t.values[1][0], 20);
  EXPECT_DOUBLE_EQ(*t.values[1][1], 50);
}

TEST(BuildTableTest, MissingBarLeavesEmptyCell) {
  auto objs = TwoSeriesPlot();
  objs.pop_back();
  const PlotTable t = BuildTable(objs, SimpleLayout());
  EXPECT_FALSE(t.values[1][1].has_value());
  EXPECT_EQ(t.CellCount(), 3u);
}

TEST(BuildTableTest, NoLegendGivesSingleColumn) {
  std::vector<TableObject> objs;
  for (const TableObject& o : TwoSeriesPlot()) {
    if (o.cls != ObjectClass::kLegendLabel &&
        o.cls != ObjectClass::kLegendPreview && o.fill != Rgb{214, 39, 40}) {
      objs.push_back(o);
    }
  }
  const PlotTable t = BuildTable(objs, SimpleLayout());
  ASSERT_EQ(t.col_headers.size(), 1u);
  EXPECT_EQ(t.col_headers[0], kDefaultSeriesName);
  EXPECT_DOUBLE_EQ(*t.values[0][0], 25);
  EXPECT_DOUBLE_EQ(*t.values[1][0], 20);
}

TEST(BuildTableTest, NoDataObjects) {
  auto objs = TwoSeriesPlot();
  objs.resize(8);
  try {
    BuildTable(objs, SimpleLayout());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoDataObjects);
  }
}

// With ground-truth boxes, every value equals the generator's own inverse
// transform of the rendered pixel, and cells stay within 0.5% of the table.
TEST(BuildTableTest, GroundTruthRoundTrip) {
  for (int i = 0; i < 30; ++i) {
    const GeneratedPlot plot = GeneratePlot(CorpusSpec(3, i));
    const auto objs = ObjectsFromAnnotations(plot.annotations, plot.image);
    const PlotTable t = BuildTable(objs, plot.layout);
    ASSERT_EQ(t.row_headers, plot.table.row_headers);
    ASSERT_EQ(t.col_headers, plot.table.col_headers);
    for (const TableObject& o : objs) {
      if (o.cls != ObjectClass::kBar) continue;
      const double y = o.box.y0();
      bool found = false;
      for (const auto& row : t.values) {
        for (const auto& v : row) {
          found = found || std::abs(*v - plot.transform.ToValue(y)) < 1e-9;
        }
      }
      EXPECT_TRUE(found);
    }
    for (size_t r = 0; r < t.values.size(); ++r) {
      for (size_t c = 0; c < t.values[r].size(); ++c) {
        const double gt = *plot.table.values[r][c];
        EXPECT_LE(std::abs(*t.values[r][c] - gt), 0.005 * gt);
      }
    }
  }
}

TEST(BuildTableTest, TallerBarHasLargerValue) {
  const GeneratedPlot plot = GeneratePlot(CorpusSpec(3, 0));
  const auto objs = ObjectsFromAnnotations(plot.annotations, plot.image);
  const PlotTable t = BuildTable(objs, plot.layout);
  std::vector<const TableObject*> bars;
  for (const TableObject& o : objs) {
    if (o.cls == ObjectClass::kBar) bars.push_back(&o);
  }
  TickScale s = BuildScale(objs);
  for (const auto* a : bars) {
    for (const auto* b : bars) {
      if (a->box.height() > b->box.height()) {
        EXPECT_GE(InterpolateValue(a->box.y0(), s),
                  InterpolateValue(b->box.y0(), s));
      }
    }
  }
}

}  // namespace
}  // namespace plotkit
