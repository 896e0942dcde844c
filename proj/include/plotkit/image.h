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
#ifndef PLOTKIT_IMAGE_H_
#define PLOTKIT_IMAGE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "plotkit/geometry.h"

namespace plotkit {

struct Rgb {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

inline double Luma(Rgb c) { return 0.299 * c.r + 0.587 * c.g + 0.114 * c.b; }

// 8-bit RGB raster, row-major. Width and height are at least 1.
class RasterImage {
 public:
  RasterImage(int width, int height, Rgb fill = kWhite);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const uint8_t> pixels() const { return pixels_; }
  std::span<uint8_t> mutable_pixels() { return pixels_; }

  bool InBounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  Rgb at(int x, int y) const {
    const size_t i = Index(x, y);
    return {pixels_[i], pixels_[i + 1], pixels_[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    const size_t i = Index(x, y);
    pixels_[i] = c.r;
    pixels_[i + 1] = c.g;
    pixels_[i + 2] = c.b;
  }
  // Clipped to the image.
  void FillRect(int x0, int y0, int x1, int y1, Rgb c);

  Box bounds() const { return Box(0, 0, width_, height_); }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  size_t Index(int x, int y) const {
    return (static_cast<size_t>(y) * width_ + x) * 3;
  }

  int width_;
  int height_;
  std::vector<uint8_t> pixels_;
};

// Decodes an 8-bit PNG (gray, RGB, palette, with or without alpha). Alpha is
// composited over white. Throws Error(kIo) when the file cannot be opened and
// Error(kDecode) with libpng's diagnostic otherwise.
RasterImage LoadImage(const std::filesystem::path& path);

// Writes an RGB PNG. Throws Error(kIo).
void SavePng(const RasterImage& image, const std::filesystem::path& path);

// Most frequent colour; ties go to the brighter colour.
Rgb DominantColor(const RasterImage& image);

}  // namespace plotkit

#endif  // PLOTKIT_IMAGE_H_
