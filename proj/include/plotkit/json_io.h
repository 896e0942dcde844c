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
#ifndef PLOTKIT_JSON_IO_H_
#define PLOTKIT_JSON_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "plotkit/annotation.h"
#include "plotkit/detection.h"
#include "plotkit/evaluator.h"
#include "plotkit/proposals.h"
#include "plotkit/synth.h"
#include "plotkit/table.h"
#include "plotkit/targets.h"

namespace plotkit {

using Json = nlohmann::ordered_json;

// Two-space indented JSON with keys in insertion order and every
// floating-point number printed with exactly 6 decimals. Ends with '\n'.
std::string DumpJson(const Json& json);

// Writes to a temporary sibling and renames. Throws Error(kIo).
void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& contents);

// Throws Error(kMissingFile) or Error(kSchemaMismatch) on parse failure.
Json ReadJsonFile(const std::filesystem::path& path);

Json BoxToJson(const Box& box);
// Throws Error(kSchemaMismatch).
Box BoxFromJson(const Json& json);

struct AnnotationFile {
  std::string image;
  int width = 0;
  int height = 0;
  std::vector<Annotation> objects;
};
Json ToJson(const AnnotationFile& file);
AnnotationFile AnnotationFileFromJson(const Json& json);

struct DetectionFile {
  std::string image;
  std::vector<Detection> detections;
  std::vector<std::string> warnings;
};
Json ToJson(const DetectionFile& file);
DetectionFile DetectionFileFromJson(const Json& json);

Json ToJson(const PlotTable& table);
PlotTable PlotTableFromJson(const Json& json);

Json ToJson(const CorpusManifest& manifest);

Json ToJson(const EvalReport& report);

Json ProposalsToJson(const std::string& image,
                     const std::vector<Proposal>& proposals);

Json TargetsToJson(const std::string& image,
                   const std::vector<Proposal>& proposals,
                   const std::vector<ProposalTargets>& targets);

}  // namespace plotkit

#endif  // PLOTKIT_JSON_IO_H_
