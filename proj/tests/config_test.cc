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
#include "plotkit/config.h"

#include <cstdlib>
#include <filesystem>

#include <gtest/gtest.h>
#include <unistd.h>

#include "plotkit/error.h"
#include "plotkit/json_io.h"

namespace plotkit {
namespace {

namespace fs = std::filesystem;

fs::path WriteTemp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() /
                     (name + std::to_string(::getpid()) + ".json");
  WriteFileAtomic(p, text);
  return p;
}

TEST(ConfigTest, Defaults) {
  const Config c;
  EXPECT_NO_THROW(ValidateConfig(c));
  EXPECT_EQ(c.detector.proposals.threshold, 8);
  EXPECT_EQ(c.detector.nms_iou, 0.5);
  EXPECT_EQ(c.iou_thresholds, (std::vector<double>{0.9, 0.75, 0.5}));
  EXPECT_EQ(c.table_rel_tol, 0.02);
  EXPECT_GE(EffectiveWorkers(c), 1);
}

TEST(ConfigTest, LoadOverridesSections) {
  const fs::path p = WriteTemp("plotkit_cfg_", R"({
    "proposals": {"threshold": 12, "max_proposals": 50},
    "detector": {"nms_iou": 0.4, "bar_fill": 0.8},
    "eval": {"iou_thresholds": [0.5], "table_rel_tol": 0.05},
    "workers": 2})");
  const Config c = LoadConfig(p);
  EXPECT_EQ(c.detector.proposals.threshold, 12);
  EXPECT_EQ(c.detector.proposals.max_proposals, 50);
  EXPECT_EQ(c.detector.proposals.min_side_px, 3);
  EXPECT_EQ(c.detector.nms_iou, 0.4);
  EXPECT_EQ(c.detector.classifier.bar_fill, 0.8);
  EXPECT_EQ(c.iou_thresholds, std::vector<double>{0.5});
  EXPECT_EQ(c.table_rel_tol, 0.05);
  EXPECT_EQ(EffectiveWorkers(c), 2);
  fs::remove(p);
}

TEST(ConfigTest, RejectsUnknownKeysAndBadRanges) {
  fs::path p = WriteTemp("plotkit_cfg_unknown_", R"({"proposal": {}})");
  try {
    LoadConfig(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaMismatch);
  }
  fs::remove(p);
  p = WriteTemp("plotkit_cfg_range_", R"({"proposals": {"threshold": 300}})");
  try {
    LoadConfig(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  fs::remove(p);
  p = WriteTemp("plotkit_cfg_iou_", R"({"eval": {"iou_thresholds": [0]}})");
  EXPECT_THROW(LoadConfig(p), Error);
  fs::remove(p);
}

TEST(ConfigTest, EnvironmentVariableSuppliesDefaultPath) {
  const fs::path p = WriteTemp("plotkit_cfg_env_", R"({"workers": 3})");
  ::setenv(kConfigEnvVar, p.c_str(), 1);
  EXPECT_EQ(ResolveConfig(std::nullopt).workers, 3);
  ::unsetenv(kConfigEnvVar);
  EXPECT_EQ(ResolveConfig(std::nullopt).workers, 0);
  fs::remove(p);
}

}  // namespace
}  // namespace plotkit
