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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fse3d {

/// Extent of a video volume in samples: width (x), height (y), frames (t).
struct Dims {
  int width = 0;
  int height = 0;
  int frames = 0;

  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
           static_cast<std::size_t>(frames);
  }
  [[nodiscard]] bool valid() const { return width >= 1 && height >= 1 && frames >= 1; }
  [[nodiscard]] bool contains(int x, int y, int t) const {
    return x >= 0 && y >= 0 && t >= 0 && x < width && y < height && t < frames;
  }
  [[nodiscard]] std::size_t index(int x, int y, int t) const {
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(width) *
               (static_cast<std::size_t>(y) + static_cast<std::size_t>(height) * static_cast<std::size_t>(t));
  }

  friend bool operator==(const Dims&, const Dims&) = default;
};

inline constexpr double kSampleMax = 255.0;

/// Luma samples v[x,y,t], x fastest, then y, then t.
class VideoVolume {
 public:
  VideoVolume() = default;
  explicit VideoVolume(Dims dims, double fill = 0.0);

  [[nodiscard]] const Dims& dims() const { return dims_; }
  [[nodiscard]] double at(int x, int y, int t) const { return samples_[dims_.index(x, y, t)]; }
  double& at(int x, int y, int t) { return samples_[dims_.index(x, y, t)]; }

  [[nodiscard]] std::span<const double> samples() const { return samples_; }
  [[nodiscard]] std::span<double> samples() { return samples_; }

 private:
  Dims dims_;
  std::vector<double> samples_;
};

enum class SampleState : std::uint8_t { Known, Unknown, Reconstructed };

/// Per-sample tri-state aligned with a VideoVolume.
class HoleMask {
 public:
  HoleMask() = default;
  explicit HoleMask(Dims dims, SampleState fill = SampleState::Known);

  [[nodiscard]] const Dims& dims() const { return dims_; }
  [[nodiscard]] SampleState at(int x, int y, int t) const { return states_[dims_.index(x, y, t)]; }
  SampleState& at(int x, int y, int t) { return states_[dims_.index(x, y, t)]; }

  [[nodiscard]] std::span<const SampleState> states() const { return states_; }
  [[nodiscard]] std::span<SampleState> states() { return states_; }

  [[nodiscard]] std::size_t count(SampleState state) const;
  /// Samples that were part of a hole, filled or not.
  [[nodiscard]] std::size_t hole_count() const;

  friend bool operator==(const HoleMask&, const HoleMask&) = default;

 private:
  Dims dims_;
  std::vector<SampleState> states_;
};

/// Linear cube position in the grid, x fastest, then y, then t.
using CubeId = std::size_t;

struct CubeCoord {
  int x = 0;
  int y = 0;
  int t = 0;
};

/// Sample-space box [x0, x0+sx) x [y0, y0+sy) x [t0, t0+st).
struct Box {
  int x0 = 0, y0 = 0, t0 = 0;
  int sx = 0, sy = 0, st = 0;
};

/// Partition of a volume into C x C x C cubes (edge cubes may be smaller).
class CubeGrid {
 public:
  CubeGrid() = default;
  CubeGrid(Dims volume, int cube_edge);

  [[nodiscard]] int cube_edge() const { return edge_; }
  [[nodiscard]] const Dims& volume_dims() const { return volume_; }
  /// Number of cubes along x, y and t.
  [[nodiscard]] const Dims& grid_dims() const { return grid_; }
  [[nodiscard]] std::size_t cube_count() const { return grid_.size(); }

  [[nodiscard]] CubeId id(CubeCoord c) const { return grid_.index(c.x, c.y, c.t); }
  [[nodiscard]] CubeCoord coord(CubeId id) const;
  [[nodiscard]] Box extent(CubeId id) const;

  /// Indices of the (up to 26) cubes at Chebyshev distance 1.
  [[nodiscard]] std::vector<CubeId> neighbors(CubeId id) const;
  /// Number of axes along which the cube touches the grid boundary (0..3).
  [[nodiscard]] int boundary_axes(CubeId id) const;
  [[nodiscard]] bool adjacent(CubeId a, CubeId b) const;

  [[nodiscard]] bool has_unknown(CubeId id) const { return has_unknown_[id] != 0; }
  void set_has_unknown(CubeId id, bool v) { has_unknown_[id] = v ? 1 : 0; }

  /// N(c): not-yet-extrapolated neighbor count, -1 once nothing is left to fill.
  [[nodiscard]] int count(CubeId id) const { return counts_[id]; }
  int& count(CubeId id) { return counts_[id]; }
  [[nodiscard]] std::span<const int> counts() const { return counts_; }

 private:
  Dims volume_;
  Dims grid_;
  int edge_ = 0;
  std::vector<std::uint8_t> has_unknown_;
  std::vector<int> counts_;
};

/// Splits the volume into cubes and flags those holding UNKNOWN samples.
CubeGrid partition(const VideoVolume& volume, const HoleMask& mask, int cube_edge);

/// Positions (in volume sample order inside the cube) of the UNKNOWN samples of a cube.
std::vector<std::size_t> unknown_samples(const HoleMask& mask, const CubeGrid& grid, CubeId cube);

/// Writes `values` (one per UNKNOWN sample of the cube, in unknown_samples order),
/// clamped to [0, 255], and marks those samples RECONSTRUCTED.
void commit_cube(VideoVolume& volume, HoleMask& mask, const CubeGrid& grid, CubeId cube,
                 std::span<const double> values);

inline double clamp_sample(double v) {
  return v < 0.0 ? 0.0 : (v > kSampleMax ? kSampleMax : v);
}

}  // namespace fse3d
