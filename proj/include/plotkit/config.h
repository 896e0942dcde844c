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
#ifndef PLOTKIT_CONFIG_H_
#define PLOTKIT_CONFIG_H_

#include <filesystem>
#include <optional>
#include <vector>

#include "plotkit/detector.h"
#include "plotkit/evaluator.h"

namespace plotkit {

inline constexpr const char* kConfigEnvVar = "PLOTKIT_CONFIG";

struct Config {
  DetectorConfig detector;  // includes the proposal settings
  std::vector<double> iou_thresholds = kDefaultIouThresholds;
  double table_rel_tol = 0.02;
  int workers = 0;  // 0: one per logical CPU
};

// Throws Error(kInvalidArgument) naming the first out-of-range field.
void ValidateConfig(const Config& config);

// Fields absent from the file keep their defaults. Unknown keys are
// rejected. Throws Error(kMissingFile), Error(kSchemaMismatch) or
// Error(kInvalidArgument).
Config LoadConfig(const std::filesystem::path& path);

// The explicit path if given, else $PLOTKIT_CONFIG if set, else defaults.
Config ResolveConfig(const std::optional<std::filesystem::path>& path);

int EffectiveWorkers(const Config& config);

}  // namespace plotkit

#endif  // PLOTKIT_CONFIG_H_
