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
#include "plotkit/font.h"

#include <algorithm>
#include <array>
#include <optional>

namespace plotkit {
namespace {

// Classic 5x7 column-major font for ASCII 0x20..0x7E. Bit 0 of each column
// byte is the top row.
constexpr std::array<std::array<uint8_t, 5>, 95> kGlyphs = {{
    {0x00, 0x00, 0x00, 0x00, 0x00},  // ' '
    {0x00, 0x00, 0x5F, 0x00, 0x00},  // !
    {0x00, 0x07, 0x00, 0x07, 0x00},  // "
    {0x14, 0x7F, 0x14, 0x7F, 0x14},  // #
    {0x24, 0x2A, 0x7F, 0x2A, 0x12},  // $
    {0x23, 0x13, 0x08, 0x64, 0x62},  // %
    {0x36, 0x49, 0x56, 0x20, 0x50},  // &
    {0x00, 0x00, 0x07, 0x00, 0x00},  // '
    {0x00, 0x1C, 0x22, 0x41, 0x00},  // (
    {0x00, 0x41, 0x22, 0x1C, 0x00},  // )
    {0x2A, 0x1C, 0x7F, 0x1C, 0x2A},  // *
    {0x08, 0x08, 0x3E, 0x08, 0x08},  // +
    {0x00, 0x50, 0x30, 0x00, 0x00},  // ,
    {0x08, 0x08, 0x08, 0x08, 0x08},  // -
    {0x00, 0x60, 0x60, 0x00, 0x00},  // .
    {0x20, 0x10, 0x08, 0x04, 0x02},  // /
    {0x3E, 0x51, 0x49, 0x45, 0x3E},  // 0
    {0x00, 0x42, 0x7F, 0x40, 0x00},  // 1
    {0x72, 0x49, 0x49, 0x49, 0x46},  // 2
    {0x21, 0x41, 0x49, 0x4D, 0x33},  // 3
    {0x18, 0x14, 0x12, 0x7F, 0x10},  // 4
    {0x27, 0x45, 0x45, 0x45, 0x39},  // 5
    {0x3C, 0x4A, 0x49, 0x49, 0x31},  // 6
    {0x41, 0x21, 0x11, 0x09, 0x07},  // 7
    {0x36, 0x49, 0x49, 0x49, 0x36},  // 8
    {0x46, 0x49, 0x49, 0x29, 0x1E},  // 9
    {0x00, 0x36, 0x36, 0x00, 0x00},  // :
    {0x00, 0x56, 0x36, 0x00, 0x00},  // ;
    {0x08, 0x14, 0x22, 0x41, 0x00},  // <
    {0x14, 0x14, 0x14, 0x14, 0x14},  // =
    {0x00, 0x41, 0x22, 0x14, 0x08},  // >
    {0x02, 0x01, 0x51, 0x09, 0x06},  // ?
    {0x32, 0x49, 0x79, 0x41, 0x3E},  // @
    {0x7C, 0x12, 0x11, 0x12, 0x7C},  // A
    {0x7F, 0x49, 0x49, 0x49, 0x36},  // B
    {0x3E, 0x41, 0x41, 0x41, 0x22},  // C
    {0x7F, 0x41, 0x41, 0x41, 0x3E},  // D
    {0x7F, 0x49, 0x49, 0x49, 0x41},  // E
    {0x7F, 0x09, 0x09, 0x09, 0x01},  // F
    {0x3E, 0x41, 0x41, 0x51, 0x73},  // G
    {0x7F, 0x08, 0x08, 0x08, 0x7F},  // H
    {0x00, 0x41, 0x7F, 0x41, 0x00},  // I
    {0x20, 0x40, 0x41, 0x3F, 0x01},  // J
    {0x7F, 0x08, 0x14, 0x22, 0x41},  // K
    {0x7F, 0x40, 0x40, 0x40, 0x40},  // L
    {0x7F, 0x02, 0x1C, 0x02, 0x7F},  // M
    {0x7F, 0x04, 0x08, 0x10, 0x7F},  // N
    {0x3E, 0x41, 0x41, 0x41, 0x3E},  // O
    {0x7F, 0x09, 0x09, 0x09, 0x06},  // P
    {0x3E, 0x41, 0x51, 0x21, 0x5E},  // Q
    {0x7F, 0x09, 0x19, 0x29, 0x46},  // R
    {0x26, 0x49, 0x49, 0x49, 0x32},  // S
    {0x03, 0x01, 0x7F, 0x01, 0x03},  // T
    {0x3F, 0x40, 0x40, 0x40, 0x3F},  // U
    {0x1F, 0x20, 0x40, 0x20, 0x1F},  // V
    {0x3F, 0x40, 0x38, 0x40, 0x3F},  // W
    {0x63, 0x14, 0x08, 0x14, 0x63},  // X
    {0x03, 0x04, 0x78, 0x04, 0x03},  // Y
    {0x61, 0x59, 0x49, 0x4D, 0x43},  // Z
    {0x00, 0x7F, 0x41, 0x41, 0x00},  // [
    {0x02, 0x04, 0x08, 0x10, 0x20},  // backslash
    {0x00, 0x41, 0x41, 0x7F, 0x00},  // ]
    {0x04, 0x02, 0x01, 0x02, 0x04},  // ^
    {0x40, 0x40, 0x40, 0x40, 0x40},  // _
    {0x00, 0x01, 0x02, 0x04, 0x00},  // `
    {0x20, 0x54, 0x54, 0x78, 0x40},  // a
    {0x7F, 0x28, 0x44, 0x44, 0x38},  // b
    {0x38, 0x44, 0x44, 0x44, 0x28},  // c
    {0x38, 0x44, 0x44, 0x28, 0x7F},  // d
    {0x38, 0x54, 0x54, 0x54, 0x18},  // e
    {0x00, 0x08, 0x7E, 0x09, 0x02},  // f
    {0x0C, 0x52, 0x52, 0x52, 0x3E},  // g
    {0x7F, 0x08, 0x04, 0x04, 0x78},  // h
    {0x00, 0x44, 0x7D, 0x40, 0x00},  // i
    {0x20, 0x40, 0x44, 0x3D, 0x00},  // j
    {0x7F, 0x10, 0x28, 0x44, 0x00},  // k
    {0x00, 0x41, 0x7F, 0x40, 0x00},  // l
    {0x7C, 0x04, 0x78, 0x04, 0x78},  // m
    {0x7C, 0x08, 0x04, 0x04, 0x78},  // n
    {0x38, 0x44, 0x44, 0x44, 0x38},  // o
    {0x7C, 0x14, 0x14, 0x14, 0x08},  // p
    {0x08, 0x14, 0x14, 0x18, 0x7C},  // q
    {0x7C, 0x08, 0x04, 0x04, 0x08},  // r
    {0x48, 0x54, 0x54, 0x54, 0x20},  // s
    {0x04, 0x3F, 0x44, 0x40, 0x20},  // t
    {0x3C, 0x40, 0x40, 0x20, 0x7C},  // u
    {0x1C, 0x20, 0x40, 0x20, 0x1C},  // v
    {0x3C, 0x40, 0x30, 0x40, 0x3C},  // w
    {0x44, 0x28, 0x10, 0x28, 0x44},  // x
    {0x0C, 0x50, 0x50, 0x50, 0x3C},  // y
    {0x44, 0x64, 0x54, 0x4C, 0x44},  // z
    {0x00, 0x08, 0x36, 0x41, 0x00},  // {
    {0x00, 0x00, 0x7F, 0x00, 0x00},  // |
    {0x00, 0x41, 0x36, 0x08, 0x00},  // }
    {0x08, 0x04, 0x08, 0x10, 0x08},  // ~
}};

constexpr int kGlyphRows = 7;

const std::array<uint8_t, 5>& Glyph(char c) {
  if (c < 0x20 || c > 0x7E) c = '?';
  return kGlyphs[static_cast<size_t>(c - 0x20)];
}

// Columns of the glyph that contain ink.
std::pair<int, int> InkColumns(const std::array<uint8_t, 5>& g) {
  int first = 0, last = 4;
  while (first < 5 && g[first] == 0) ++first;
  while (last >= 0 && g[last] == 0) --last;
  return {first, last};
}

// Whether the edge rings of two glyph columns set a gap apart would touch:
// some ink rows must be at most one row apart. Pairs that fail are set
// without a gap so every line of text stays one edge component.
bool FacingColumnsTouch(uint8_t left, uint8_t right) {
  const unsigned spread = right | (right << 1) | (right >> 1);
  return (left & spread) != 0;
}

}  // namespace

TextMask RasterizeText(std::string_view text, int scale) {
  scale = std::max(scale, 1);
  // Split into words on spaces.
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    const size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }

  // First pass: x offsets of every glyph column.
  struct Placed {
    const std::array<uint8_t, 5>* glyph;
    int first_col;
    int last_col;
    int x;
  };
  std::vector<Placed> placed;
  std::vector<std::pair<size_t, size_t>> word_spans;  // [begin, end) in placed
  int cursor = 0;
  for (size_t w = 0; w < words.size(); ++w) {
    const size_t begin = placed.size();
    for (char c : words[w]) {
      const auto& g = Glyph(c);
      const auto [first, last] = InkColumns(g);
      if (first > last) continue;
      if (!placed.empty()) {
        const Placed& prev = placed.back();
        const int gap = begin == placed.size() ? kWordGapPx : kLetterGapPx;
        cursor += FacingColumnsTouch((*prev.glyph)[prev.last_col], g[first])
                      ? gap
                      : 0;
      }
      placed.push_back({&g, first, last, cursor});
      cursor += (last - first + 1) * scale;
    }
    word_spans.emplace_back(begin, placed.size());
  }

  const int full_w = std::max(cursor, 1);
  const int full_h = kGlyphRows * scale;
  std::vector<uint8_t> full(static_cast<size_t>(full_w) * full_h, 0);
  for (const Placed& p : placed) {
    for (int col = p.first_col; col <= p.last_col; ++col) {
      const uint8_t bits = (*p.glyph)[col];
      for (int row = 0; row < kGlyphRows; ++row) {
        if (!(bits & (1u << row))) continue;
        const int x0 = p.x + (col - p.first_col) * scale;
        for (int dy = 0; dy < scale; ++dy) {
          for (int dx = 0; dx < scale; ++dx) {
            full[static_cast<size_t>(row * scale + dy) * full_w + x0 + dx] = 1;
          }
        }
      }
    }
  }

  auto ink_box = [&](int x_begin, int x_end) -> std::optional<Box> {
    int x0 = x_end, x1 = x_begin, y0 = full_h, y1 = 0;
    for (int y = 0; y < full_h; ++y) {
      for (int x = x_begin; x < x_end; ++x) {
        if (!full[static_cast<size_t>(y) * full_w + x]) continue;
        x0 = std::min(x0, x);
        x1 = std::max(x1, x + 1);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y + 1);
      }
    }
    if (x1 <= x0) return std::nullopt;
    return Box(x0, y0, x1, y1);
  };

  TextMask mask;
  const auto whole = ink_box(0, full_w);
  if (!whole) return mask;
  const int ox = static_cast<int>(whole->x0());
  const int oy = static_cast<int>(whole->y0());
  mask.width = static_cast<int>(whole->width());
  mask.height = static_cast<int>(whole->height());
  mask.bits.assign(static_cast<size_t>(mask.width) * mask.height, 0);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      mask.bits[static_cast<size_t>(y) * mask.width + x] =
          full[static_cast<size_t>(y + oy) * full_w + x + ox];
    }
  }
  for (const auto& [begin, end] : word_spans) {
    if (begin == end) continue;
    const Placed& a = placed[begin];
    const Placed& b = placed[end - 1];
    const int x_end = b.x + (b.last_col - b.first_col + 1) * scale;
    if (auto box = ink_box(a.x, x_end)) {
      mask.words.push_back(box->Translated(-ox, -oy));
    }
  }
  return mask;
}

TextMask RotateCcw(const TextMask& mask) {
  TextMask out;
  out.width = mask.height;
  out.height = mask.width;
  out.bits.assign(mask.bits.size(), 0);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      // new(x, y) = old(w - 1 - y, x)
      out.bits[static_cast<size_t>(y) * out.width + x] =
          mask.bits[static_cast<size_t>(x) * mask.width + (mask.width - 1 - y)];
    }
  }
  const double w = mask.width;
  for (const Box& b : mask.words) {
    out.words.push_back(Box(b.y0(), w - b.x1(), b.y1(), w - b.x0()));
  }
  return out;
}

PlacedText DrawText(RasterImage& image, const TextMask& mask, int x, int y,
                    Rgb color) {
  for (int my = 0; my < mask.height; ++my) {
    for (int mx = 0; mx < mask.width; ++mx) {
      if (mask.at(mx, my) && image.InBounds(x + mx, y + my)) {
        image.set(x + mx, y + my, color);
      }
    }
  }
  PlacedText placed{Box(x, y, x + mask.width, y + mask.height), {}};
  for (const Box& b : mask.words) placed.words.push_back(b.Translated(x, y));
  return placed;
}

}  // namespace plotkit
