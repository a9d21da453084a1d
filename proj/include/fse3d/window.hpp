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
#include <vector>

#include "fse3d/core.hpp"
#include "fse3d/params.hpp"

namespace fse3d {

/// Class of a sample inside an extrapolation window.
enum class SampleClass : std::uint8_t {
  Available,      ///< originally known
  Reconstructed,  ///< filled by an earlier cube
  CubeUnknown,    ///< unknown, inside the cube being filled
  OuterUnknown,   ///< unknown outside the cube, or outside the volume
};

/// Window size M x N x P, m along x, n along y, p along t.
struct WindowShape {
  int m = 0;
  int n = 0;
  int p = 0;

  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(n) * static_cast<std::size_t>(p);
  }
  /// Row-major (m slowest, p fastest), the layout of the 3D transforms.
  [[nodiscard]] std::size_t index(int im, int in, int ip) const {
    return static_cast<std::size_t>(ip) +
           static_cast<std::size_t>(p) *
               (static_cast<std::size_t>(in) + static_cast<std::size_t>(n) * static_cast<std::size_t>(im));
  }
  friend bool operator==(const WindowShape&, const WindowShape&) = default;
};

/// The extrapolation volume L around one cube.
struct ExtrapolationVolume {
  WindowShape shape;
  int origin_x = 0;  ///< volume coordinate of window sample (0,0,0); may be negative
  int origin_y = 0;
  int origin_t = 0;
  std::vector<double> signal;         ///< s[m,n,p]; 0 where no sample exists
  std::vector<SampleClass> classes;   ///< class[m,n,p]

  [[nodiscard]] std::size_t count(SampleClass c) const;
};

/// Cuts the window of size C+2B centred on `cube`. Samples beyond the volume are OuterUnknown.
/// Throws std::invalid_argument when the cube holds no UNKNOWN sample.
ExtrapolationVolume extract_window(const VideoVolume& volume, const HoleMask& mask, const CubeGrid& grid,
                                   CubeId cube, const FseParams& params);

}  // namespace fse3d
