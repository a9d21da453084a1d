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

#include "fse3d/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fse3d {
namespace {

// Uniform integer in [lo, hi]. std::uniform_int_distribution is not specified
// bit-exactly across standard libraries, so masks would differ between builds.
int draw(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
  return lo + static_cast<int>(rng() % span);
}

void require_dims(const Dims& dims) {
  if (!dims.valid()) throw std::invalid_argument("pattern dimensions must be positive");
}

void require_count(int count) {
  if (count < 0) throw std::invalid_argument("pattern count must be >= 0");
}

}  // namespace

bool Lens::contains(int x, int y, int t) const {
  const double dx = (x - cx) / rs;
  const double dy = (y - cy) / rs;
  const double dt = (t - ct) / rt;
  return dx * dx + dy * dy + dt * dt <= 1.0;
}

bool DiagonalBar::contains(int x, int y, int t) const {
  return x >= x0 + t && x < x0 + t + sx && y >= y0 + t && y < y0 + t + sy;
}

void stamp(HoleMask& mask, const Box& box) {
  const Dims& d = mask.dims();
  const int x1 = std::min(d.width, box.x0 + box.sx);
  const int y1 = std::min(d.height, box.y0 + box.sy);
  const int t1 = std::min(d.frames, box.t0 + box.st);
  for (int t = std::max(0, box.t0); t < t1; ++t)
    for (int y = std::max(0, box.y0); y < y1; ++y)
      for (int x = std::max(0, box.x0); x < x1; ++x) mask.at(x, y, t) = SampleState::Unknown;
}

void stamp(HoleMask& mask, const Lens& lens) {
  const Dims& d = mask.dims();
  const int rs = static_cast<int>(std::ceil(lens.rs));
  const int rt = static_cast<int>(std::ceil(lens.rt));
  for (int t = std::max(0, lens.ct - rt); t <= std::min(d.frames - 1, lens.ct + rt); ++t)
    for (int y = std::max(0, lens.cy - rs); y <= std::min(d.height - 1, lens.cy + rs); ++y)
      for (int x = std::max(0, lens.cx - rs); x <= std::min(d.width - 1, lens.cx + rs); ++x)
        if (lens.contains(x, y, t)) mask.at(x, y, t) = SampleState::Unknown;
}

void stamp(HoleMask& mask, const DiagonalBar& bar, int frames) {
  for (int t = 0; t < frames; ++t) stamp(mask, Box{bar.x0 + t, bar.y0 + t, t, bar.sx, bar.sy, 1});
}

std::vector<DiagonalBar> diagonal_bar_shapes(const Dims& dims, int count, int sx, int sy, std::uint64_t seed) {
  require_dims(dims);
  require_count(count);
  if (sx < 1 || sy < 1) throw std::invalid_argument("bar cross-section must be positive");
  if (dims.width < sx || dims.height < sy) throw std::invalid_argument("volume smaller than bar cross-section");
  // Start positions that keep the bar inside the frame for the whole sequence when possible.
  const int travel = dims.frames - 1;
  const int max_x = std::max(0, dims.width - sx - travel);
  const int max_y = std::max(0, dims.height - sy - travel);
  std::mt19937_64 rng(seed);
  std::vector<DiagonalBar> bars;
  for (int i = 0; i < count; ++i) {
    const int x0 = draw(rng, 0, max_x);
    const int y0 = draw(rng, 0, max_y);
    bars.push_back(DiagonalBar{x0, y0, sx, sy});
  }
  return bars;
}

std::vector<Lens> lens_shapes(const Dims& dims, int count, double rs, double rt, std::uint64_t seed) {
  require_dims(dims);
  require_count(count);
  if (!(rs > 0.0) || !(rt > 0.0)) throw std::invalid_argument("lens radii must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Lens> lenses;
  for (int i = 0; i < count; ++i) {
    const int cx = draw(rng, 0, dims.width - 1);
    const int cy = draw(rng, 0, dims.height - 1);
    const int ct = draw(rng, 0, dims.frames - 1);
    lenses.push_back(Lens{cx, cy, ct, rs, rt});
  }
  return lenses;
}

std::vector<Box> linear_bar_shapes(const Dims& dims, int count, int sx, int sy, int st, std::uint64_t seed) {
  require_dims(dims);
  require_count(count);
  if (sx < 1 || sy < 1 || st < 1) throw std::invalid_argument("bar size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Box> boxes;
  for (int i = 0; i < count; ++i) {
    const int cx = draw(rng, 0, dims.width - 1);
    const int cy = draw(rng, 0, dims.height - 1);
    const int ct = draw(rng, 0, dims.frames - 1);
    boxes.push_back(Box{cx - sx / 2, cy - sy / 2, ct - st / 2, sx, sy, st});
  }
  return boxes;
}

HoleMask gen_diagonal_bars(const Dims& dims, int count, int sx, int sy, std::uint64_t seed) {
  const auto bars = diagonal_bar_shapes(dims, count, sx, sy, seed);
  HoleMask mask(dims);
  for (const auto& bar : bars) stamp(mask, bar, dims.frames);
  return mask;
}

HoleMask gen_lenses(const Dims& dims, int count, double rs, double rt, std::uint64_t seed) {
  const auto lenses = lens_shapes(dims, count, rs, rt, seed);
  HoleMask mask(dims);
  for (const auto& lens : lenses) stamp(mask, lens);
  return mask;
}

HoleMask gen_linear_bars(const Dims& dims, int count, int sx, int sy, int st, std::uint64_t seed) {
  const auto boxes = linear_bar_shapes(dims, count, sx, sy, st, seed);
  HoleMask mask(dims);
  for (const auto& box : boxes) stamp(mask, box);
  return mask;
}

HoleMask generate(const Dims& dims, const PatternSpec& spec) {
  switch (spec.kind) {
    case PatternKind::DiagonalBars:
      return gen_diagonal_bars(dims, spec.count, spec.extent_x, spec.extent_y, spec.seed);
    case PatternKind::Lenses:
      return gen_lenses(dims, spec.count, spec.radius_spatial, spec.radius_temporal, spec.seed);
    case PatternKind::LinearBars:
      return gen_linear_bars(dims, spec.count, spec.extent_x, spec.extent_y, spec.extent_t, spec.seed);
  }
  throw std::invalid_argument("unknown pattern kind");
}

const std::vector<std::string>& pattern_kind_names() {
  static const std::vector<std::string> names{"bars-diagonal", "lenses", "bars-linear"};
  return names;
}

PatternKind parse_pattern_kind(const std::string& name) {
  if (name == "bars-diagonal") return PatternKind::DiagonalBars;
  if (name == "lenses") return PatternKind::Lenses;
  if (name == "bars-linear") return PatternKind::LinearBars;
  throw std::invalid_argument("unknown pattern kind '" + name + "' (expected bars-diagonal, lenses, bars-linear)");
}

double hole_ratio(const HoleMask& mask) {
  return static_cast<double>(mask.hole_count()) / static_cast<double>(mask.dims().size());
}

}  // namespace fse3d
