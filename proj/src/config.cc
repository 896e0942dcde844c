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
#include <functional>
#include <map>
#include <string>

#include "plotkit/error.h"
#include "plotkit/json_io.h"
#include "plotkit/parallel.h"

namespace plotkit {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "config: " + what);
}

void RequireRange(const char* name, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi)) {
    Invalid(std::string(name) + " must be in [" + std::to_string(lo) + ", " +
            std::to_string(hi) + "], got " + std::to_string(v));
  }
}

using Setter = std::function<void(const Json&)>;

template <typename T>
Setter NumberSetter(T* field) {
  return [field](const Json& j) {
    if (!j.is_number()) {
      throw Error(ErrorCode::kSchemaMismatch, "config value is not a number");
    }
    *field = j.get<T>();
  };
}

void ApplySection(const Json& section, const std::map<std::string, Setter>& setters,
                  const std::string& name) {
  if (!section.is_object()) {
    throw Error(ErrorCode::kSchemaMismatch,
                "config section '" + name + "' is not an object");
  }
  for (auto it = section.begin(); it != section.end(); ++it) {
    auto s = setters.find(it.key());
    if (s == setters.end()) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "unknown config key '" + name + "." + it.key() + "'");
    }
    s->second(it.value());
  }
}

}  // namespace

void ValidateConfig(const Config& c) {
  const ProposalConfig& p = c.detector.proposals;
  RequireRange("proposals.threshold", p.threshold, 0, 255);
  RequireRange("proposals.min_side_px", p.min_side_px, 1, 1e6);
  RequireRange("proposals.max_proposals", p.max_proposals, 1, 1e7);
  const ClassifierConfig& k = c.detector.classifier;
  RequireRange("classifier.saturated_chroma", k.saturated_chroma, 0, 255);
  RequireRange("classifier.dark_luma", k.dark_luma, 0, 255);
  RequireRange("classifier.text_edge_density", k.text_edge_density, 0, 1);
  RequireRange("classifier.text_ink_density", k.text_ink_density, 0, 1);
  RequireRange("classifier.bar_fill", k.bar_fill, 0, 1);
  RequireRange("classifier.dot_fill", k.dot_fill, 0, 1);
  RequireRange("classifier.preview_fill", k.preview_fill, 0, 1);
  RequireRange("detector.link_window_px", c.detector.link_window_px, 0, 1e6);
  RequireRange("detector.link_gap_px", c.detector.link_gap_px, 0, 1e6);
  RequireRange("detector.nms_iou", c.detector.nms_iou, 0, 1);
  if (c.iou_thresholds.empty()) Invalid("eval.iou_thresholds is empty");
  for (double t : c.iou_thresholds) {
    if (!(t > 0.0 && t <= 1.0)) Invalid("eval.iou_thresholds must be in (0, 1]");
  }
  if (!(c.table_rel_tol > 0.0)) Invalid("eval.table_rel_tol must be > 0");
  RequireRange("workers", c.workers, 0, 4096);
}

Config LoadConfig(const std::filesystem::path& path) {
  const Json j = ReadJsonFile(path);
  Config c;
  ProposalConfig& p = c.detector.proposals;
  ClassifierConfig& k = c.detector.classifier;
  const std::map<std::string, Setter> proposal_keys = {
      {"threshold", NumberSetter(&p.threshold)},
      {"min_side_px", NumberSetter(&p.min_side_px)},
      {"max_proposals", NumberSetter(&p.max_proposals)}};
  const std::map<std::string, Setter> detector_keys = {
      {"saturated_chroma", NumberSetter(&k.saturated_chroma)},
      {"dark_luma", NumberSetter(&k.dark_luma)},
      {"text_edge_density", NumberSetter(&k.text_edge_density)},
      {"text_ink_density", NumberSetter(&k.text_ink_density)},
      {"bar_fill", NumberSetter(&k.bar_fill)},
      {"bar_min_side_px", NumberSetter(&k.bar_min_side_px)},
      {"bar_min_long_side_px", NumberSetter(&k.bar_min_long_side_px)},
      {"dot_max_side_px", NumberSetter(&k.dot_max_side_px)},
      {"dot_min_side_px", NumberSetter(&k.dot_min_side_px)},
      {"dot_fill", NumberSetter(&k.dot_fill)},
      {"dot_max_skew_px", NumberSetter(&k.dot_max_skew_px)},
      {"preview_max_side_px", NumberSetter(&k.preview_max_side_px)},
      {"preview_fill", NumberSetter(&k.preview_fill)},
      {"x_tick_band_px", NumberSetter(&k.x_tick_band_px)},
      {"y_label_band_px", NumberSetter(&k.y_label_band_px)},
      {"link_window_px", NumberSetter(&c.detector.link_window_px)},
      {"link_gap_px", NumberSetter(&c.detector.link_gap_px)},
      {"nms_iou", NumberSetter(&c.detector.nms_iou)}};
  const std::map<std::string, Setter> eval_keys = {
      {"iou_thresholds",
       [&c](const Json& v) {
         if (!v.is_array()) {
           throw Error(ErrorCode::kSchemaMismatch,
                       "eval.iou_thresholds is not an array");
         }
         c.iou_thresholds.clear();
         for (const Json& t : v) {
           if (!t.is_number()) {
             throw Error(ErrorCode::kSchemaMismatch,
                         "eval.iou_thresholds holds a non-number");
           }
           c.iou_thresholds.push_back(t.get<double>());
         }
       }},
      {"table_rel_tol", NumberSetter(&c.table_rel_tol)}};
  const std::map<std::string, Setter> top = {
      {"proposals", [&](const Json& v) { ApplySection(v, proposal_keys, "proposals"); }},
      {"detector", [&](const Json& v) { ApplySection(v, detector_keys, "detector"); }},
      {"eval", [&](const Json& v) { ApplySection(v, eval_keys, "eval"); }},
      {"workers", NumberSetter(&c.workers)}};
  if (!j.is_object()) {
    throw Error(ErrorCode::kSchemaMismatch, "config must be a JSON object");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto s = top.find(it.key());
    if (s == top.end()) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "unknown config key '" + it.key() + "'");
    }
    s->second(it.value());
  }
  ValidateConfig(c);
  return c;
}

Config ResolveConfig(const std::optional<std::filesystem::path>& path) {
  if (path) return LoadConfig(*path);
  if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
    return LoadConfig(env);
  }
  return Config{};
}

int EffectiveWorkers(const Config& config) {
  return config.workers > 0 ? config.workers : DefaultWorkers();
}

}  // namespace plotkit
