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
#ifndef PLOTKIT_FONT_H_
#define PLOTKIT_FONT_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "plotkit/geometry.h"
#include "plotkit/image.h"

namespace plotkit {

// Text rasterized with the embedded proportional 5x7 bitmap font. The mask
// is cropped to the ink bounding box, so (0, 0) is the top-left ink pixel.
struct TextMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> bits;  // row-major, 1 = ink
  std::vector<Box> words;     // ink box of each word, mask coordinates

  bool at(int x, int y) const {
    return bits[static_cast<size_t>(y) * width + x] != 0;
  }
};

inline constexpr int kLetterGapPx = 1;
inline constexpr int kWordGapPx = 2;

// Glyph pixels are scaled to scale x scale blocks; letters are separated by
// kLetterGapPx and words by kWordGapPx. Unsupported characters render as '?'.
TextMask RasterizeText(std::string_view text, int scale);

// Rotates 90 degrees counter-clockwise (text then reads bottom to top).
TextMask RotateCcw(const TextMask& mask);

// Paints the mask with its top-left ink pixel at (x, y). Returns the ink box
// of the whole text and of each word in image coordinates.
struct PlacedText {
  Box box;
  std::vector<Box> words;
};
PlacedText DrawText(RasterImage& image, const TextMask& mask, int x, int y,
                    Rgb color);

}  // namespace plotkit

#endif  // PLOTKIT_FONT_H_
