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
#include "plotkit/image.h"

#include <png.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <unordered_map>

#include "plotkit/error.h"

namespace plotkit {

RasterImage::RasterImage(int width, int height, Rgb fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be >= 1");
  }
  pixels_.resize(static_cast<size_t>(width) * height * 3);
  for (size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
  }
}

void RasterImage::FillRect(int x0, int y0, int x1, int y1, Rgb c) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, width_);
  y1 = std::min(y1, height_);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) set(x, y, c);
  }
}

RasterImage LoadImage(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  if (bytes.empty()) {
    throw Error(ErrorCode::kDecode, path.string() + ": empty file");
  }

  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kDecode, path.string() + ": " + msg);
  }
  image.format = PNG_FORMAT_RGB;
  if (image.width < 1 || image.height < 1 || image.width > (1u << 15) ||
      image.height > (1u << 15)) {
    png_image_free(&image);
    throw Error(ErrorCode::kDecode, path.string() + ": unsupported dimensions");
  }
  RasterImage out(static_cast<int>(image.width),
                  static_cast<int>(image.height));
  png_color background{255, 255, 255};
  if (!png_image_finish_read(&image, &background, out.mutable_pixels().data(),
                             0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kDecode, path.string() + ": " + msg);
  }
  return out;
}

void SavePng(const RasterImage& img, const std::filesystem::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, path.c_str(), 0, img.pixels().data(), 0,
                               nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kIo, path.string() + ": " + msg);
  }
}

Rgb DominantColor(const RasterImage& image) {
  std::unordered_map<uint32_t, int> counts;
  const auto px = image.pixels();
  for (size_t i = 0; i < px.size(); i += 3) {
    ++counts[(uint32_t{px[i]} << 16) | (uint32_t{px[i + 1]} << 8) | px[i + 2]];
  }
  uint32_t best = 0;
  int best_count = -1;
  for (const auto& [key, n] : counts) {
    if (n > best_count || (n == best_count && key > best)) {
      best = key;
      best_count = n;
    }
  }
  return {static_cast<uint8_t>(best >> 16), static_cast<uint8_t>(best >> 8),
          static_cast<uint8_t>(best)};
}

}  // namespace plotkit
