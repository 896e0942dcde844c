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
#ifndef PLOTKIT_EDGES_H_
#define PLOTKIT_EDGES_H_

#include <cstdint>
#include <vector>

#include "plotkit/image.h"

namespace plotkit {

// Binary per-pixel edge indicator with the dimensions of its source image.
class EdgeMap {
 public:
  EdgeMap(int width, int height)
      : width_(width), height_(height),
        bits_(static_cast<size_t>(width) * height, 0) {}

  int width() const { return width_; }
  int height() const { return height_; }
  bool at(int x, int y) const {
    return bits_[static_cast<size_t>(y) * width_ + x] != 0;
  }
  // Out-of-range coordinates read as background.
  bool get(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_ && at(x, y);
  }
  void set(int x, int y, bool v) {
    bits_[static_cast<size_t>(y) * width_ + x] = v ? 1 : 0;
  }
  uint8_t* row(int y) { return bits_.data() + static_cast<size_t>(y) * width_; }
  size_t CountSet() const;

  friend bool operator==(const EdgeMap&, const EdgeMap&) = default;

 private:
  int width_;
  int height_;
  std::vector<uint8_t> bits_;
};

// Luma grayscale (0.299 R + 0.587 G + 0.114 B), then the 4-neighbour
// Laplacian [[0,1,0],[1,-4,1],[0,1,0]] with replicate padding. A pixel is an
// edge iff |response| >= threshold. Rows are processed by OpenMP threads.
EdgeMap LaplacianEdges(const RasterImage& image, int threshold);

// Single-threaded reference for LaplacianEdges; results are identical.
EdgeMap LaplacianEdgesSerial(const RasterImage& image, int threshold);

}  // namespace plotkit

#endif  // PLOTKIT_EDGES_H_
