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

#include "fse3d/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace fse3d {

VideoVolume::VideoVolume(Dims dims, double fill) : dims_(dims) {
  if (!dims.valid()) throw std::invalid_argument("volume dimensions must be positive");
  samples_.assign(dims.size(), fill);
}

HoleMask::HoleMask(Dims dims, SampleState fill) : dims_(dims) {
  if (!dims.valid()) throw std::invalid_argument("mask dimensions must be positive");
  states_.assign(dims.size(), fill);
}

std::size_t HoleMask::count(SampleState state) const {
  return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), state));
}

std::size_t HoleMask::hole_count() const { return states_.size() - count(SampleState::Known); }

namespace {
int ceil_div(int a, int b) { return (a + b - 1) / b; }
}  // namespace

CubeGrid::CubeGrid(Dims volume, int cube_edge) : volume_(volume), edge_(cube_edge) {
  if (!volume.valid()) throw std::invalid_argument("volume dimensions must be positive");
  if (cube_edge < 1) throw std::invalid_argument("cube edge must be >= 1");
  grid_ = Dims{ceil_div(volume.width, cube_edge), ceil_div(volume.height, cube_edge),
               ceil_div(volume.frames, cube_edge)};
  has_unknown_.assign(grid_.size(), 0);
  counts_.assign(grid_.size(), 0);
}

CubeCoord CubeGrid::coord(CubeId id) const {
  const auto gx = static_cast<std::size_t>(grid_.width);
  const auto gy = static_cast<std::size_t>(grid_.height);
  return CubeCoord{static_cast<int>(id % gx), static_cast<int>((id / gx) % gy), static_cast<int>(id / (gx * gy))};
}

Box CubeGrid::extent(CubeId id) const {
  const CubeCoord c = coord(id);
  Box b;
  b.x0 = c.x * edge_;
  b.y0 = c.y * edge_;
  b.t0 = c.t * edge_;
  b.sx = std::min(edge_, volume_.width - b.x0);
  b.sy = std::min(edge_, volume_.height - b.y0);
  b.st = std::min(edge_, volume_.frames - b.t0);
  return b;
}

std::vector<CubeId> CubeGrid::neighbors(CubeId id) const {
  const CubeCoord c = coord(id);
  std::vector<CubeId> out;
  out.reserve(26);
  for (int dt = -1; dt <= 1; ++dt) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0 && dt == 0) continue;
        if (grid_.contains(c.x + dx, c.y + dy, c.t + dt)) out.push_back(grid_.index(c.x + dx, c.y + dy, c.t + dt));
      }
    }
  }
  return out;
}

int CubeGrid::boundary_axes(CubeId id) const {
  const CubeCoord c = coord(id);
  auto on_edge = [](int i, int n) { return i == 0 || i == n - 1; };
  return int{on_edge(c.x, grid_.width)} + int{on_edge(c.y, grid_.height)} + int{on_edge(c.t, grid_.frames)};
}

bool CubeGrid::adjacent(CubeId a, CubeId b) const {
  if (a == b) return false;
  const CubeCoord ca = coord(a);
  const CubeCoord cb = coord(b);
  return std::abs(ca.x - cb.x) <= 1 && std::abs(ca.y - cb.y) <= 1 && std::abs(ca.t - cb.t) <= 1;
}

CubeGrid partition(const VideoVolume& volume, const HoleMask& mask, int cube_edge) {
  if (volume.dims() != mask.dims()) throw std::invalid_argument("volume and mask dimensions differ");
  CubeGrid grid(volume.dims(), cube_edge);
  const Dims& d = volume.dims();
  for (int t = 0; t < d.frames; ++t) {
    for (int y = 0; y < d.height; ++y) {
      for (int x = 0; x < d.width; ++x) {
        if (mask.at(x, y, t) == SampleState::Unknown) {
          grid.set_has_unknown(grid.id({x / cube_edge, y / cube_edge, t / cube_edge}), true);
        }
      }
    }
  }
  return grid;
}

std::vector<std::size_t> unknown_samples(const HoleMask& mask, const CubeGrid& grid, CubeId cube) {
  if (mask.dims() != grid.volume_dims()) throw std::invalid_argument("mask and grid dimensions differ");
  const Box b = grid.extent(cube);
  const Dims& d = mask.dims();
  std::vector<std::size_t> out;
  for (int t = b.t0; t < b.t0 + b.st; ++t) {
    for (int y = b.y0; y < b.y0 + b.sy; ++y) {
      for (int x = b.x0; x < b.x0 + b.sx; ++x) {
        const std::size_t i = d.index(x, y, t);
        if (mask.states()[i] == SampleState::Unknown) out.push_back(i);
      }
    }
  }
  return out;
}

void commit_cube(VideoVolume& volume, HoleMask& mask, const CubeGrid& grid, CubeId cube,
                 std::span<const double> values) {
  if (volume.dims() != mask.dims()) throw std::invalid_argument("volume and mask dimensions differ");
  const auto positions = unknown_samples(mask, grid, cube);
  if (positions.size() != values.size()) {
    throw std::invalid_argument("cube has " + std::to_string(positions.size()) + " unknown samples, got " +
                                std::to_string(values.size()) + " values");
  }
  auto samples = volume.samples();
  auto states = mask.states();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    samples[positions[i]] = clamp_sample(values[i]);
    states[positions[i]] = SampleState::Reconstructed;
  }
}

}  // namespace fse3d
