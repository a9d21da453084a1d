/*
 * Copyright 2026 The fse3d Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fse3d/core.hpp"

namespace fse3d {

enum class PatternKind { DiagonalBars, Lenses, LinearBars };

/// Hole pattern description. Geometry fields not used by a kind are ignored.
struct PatternSpec {
  PatternKind kind = PatternKind::Lenses;
  int count = 30;
  int extent_x = 32;  ///< bar cross-section / box extent in x
  int extent_y = 32;
  int extent_t = 12;  ///< linear bar temporal extent
  double radius_spatial = 24.0;
  double radius_temporal = 4.0;
  std::uint64_t seed = 1;
};

/// Ellipsoid ((x-cx)/rs)^2 + ((y-cy)/rs)^2 + ((t-ct)/rt)^2 <= 1.
struct Lens {
  int cx = 0, cy = 0, ct = 0;
  double rs = 0.0, rt = 0.0;
  [[nodiscard]] bool contains(int x, int y, int t) const;
};

/// Bar of sx x sy moving by (+1, +1) per frame; top-left corner at frame t is (x0 + t, y0 + t).
struct DiagonalBar {
  int x0 = 0, y0 = 0;
  int sx = 0, sy = 0;
  [[nodiscard]] bool contains(int x, int y, int t) const;
};

/// Marks the part of `box` inside the volume as UNKNOWN.
void stamp(HoleMask& mask, const Box& box);
void stamp(HoleMask& mask, const Lens& lens);
void stamp(HoleMask& mask, const DiagonalBar& bar, int frames);

std::vector<DiagonalBar> diagonal_bar_shapes(const Dims& dims, int count, int sx, int sy, std::uint64_t seed);
std::vector<Lens> lens_shapes(const Dims& dims, int count, double rs, double rt, std::uint64_t seed);
std::vector<Box> linear_bar_shapes(const Dims& dims, int count, int sx, int sy, int st, std::uint64_t seed);

HoleMask gen_diagonal_bars(const Dims& dims, int count = 8, int sx = 32, int sy = 32, std::uint64_t seed = 1);
HoleMask gen_lenses(const Dims& dims, int count = 30, double rs = 24.0, double rt = 4.0, std::uint64_t seed = 1);
HoleMask gen_linear_bars(const Dims& dims, int count = 30, int sx = 32, int sy = 32, int st = 12,
                         std::uint64_t seed = 1);

HoleMask generate(const Dims& dims, const PatternSpec& spec);

/// "bars-diagonal", "lenses", "bars-linear".
PatternKind parse_pattern_kind(const std::string& name);
const std::vector<std::string>& pattern_kind_names();

/// Fraction of samples that belong to a hole.
double hole_ratio(const HoleMask& mask);

}  // namespace fse3d
