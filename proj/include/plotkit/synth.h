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
#ifndef PLOTKIT_SYNTH_H_
#define PLOTKIT_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "plotkit/annotation.h"
#include "plotkit/image.h"
#include "plotkit/layout.h"
#include "plotkit/table.h"

namespace plotkit {

enum class PlotKind { kVerticalBar, kDotLine };

const char* PlotKindName(PlotKind kind);

struct PlotSpec {
  PlotKind kind = PlotKind::kVerticalBar;
  int series = 1;      // 1..3
  int categories = 4;  // 2..8
  double value_lo = 10.0;
  double value_hi = 100.0;
  std::vector<Rgb> palette;  // at least `series` saturated colours
  int width = 650;
  int height = 650;
  uint64_t seed = 0;
};

// Throws Error(kSpecValidation).
void ValidateSpec(const PlotSpec& spec);

// Default palette (8 saturated colours).
const std::vector<Rgb>& DefaultPalette();

// A random valid spec of the given kind and canvas size; fully determined by
// seed.
PlotSpec RandomSpec(uint64_t seed, PlotKind kind, int width = 650,
                    int height = 650);

// pixel_y = zero_y - value * px_per_unit
struct ValueTransform {
  double zero_y = 0.0;
  double px_per_unit = 1.0;

  double ToPixel(double value) const { return zero_y - value * px_per_unit; }
  double ToValue(double pixel_y) const {
    return (zero_y - pixel_y) / px_per_unit;
  }
};

struct GeneratedPlot {
  RasterImage image{1, 1};
  std::vector<Annotation> annotations;
  PlotTable table;
  PlotLayout layout;
  ValueTransform transform;
};

// Throws Error(kSpecValidation) for an invalid spec.
GeneratedPlot GeneratePlot(const PlotSpec& spec);

struct ManifestEntry {
  std::string image;       // file names relative to the corpus directory
  std::string annotation;
  std::string table;
  uint64_t seed = 0;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
};

// Spec used for corpus item `index` (kinds and canvas sizes are cycled).
PlotSpec CorpusSpec(uint64_t base_seed, int index);

// Writes plot_NNNNN.{png,ann.json,table.json} and manifest.json.
// Throws Error(kInvalidArgument) for n < 1, Error(kIo) on write failure.
CorpusManifest GenCorpus(int n, uint64_t base_seed,
                         const std::filesystem::path& out_dir, int workers = 1);

}  // namespace plotkit

#endif  // PLOTKIT_SYNTH_H_
