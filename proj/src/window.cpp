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

#include "fse3d/window.hpp"

#include <algorithm>
#include <stdexcept>

namespace fse3d {

std::size_t ExtrapolationVolume::count(SampleClass c) const {
  return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), c));
}

ExtrapolationVolume extract_window(const VideoVolume& volume, const HoleMask& mask, const CubeGrid& grid,
                                   CubeId cube, const FseParams& params) {
  if (volume.dims() != mask.dims() || volume.dims() != grid.volume_dims()) {
    throw std::invalid_argument("volume, mask and grid dimensions differ");
  }
  if (params.cube_edge != grid.cube_edge()) throw std::invalid_argument("parameter cube edge differs from grid");
  if (cube >= grid.cube_count()) throw std::out_of_range("cube index out of range");

  const Box b = grid.extent(cube);
  const int size = params.window_size();
  ExtrapolationVolume w;
  w.shape = WindowShape{size, size, size};
  w.origin_x = b.x0 - params.border;
  w.origin_y = b.y0 - params.border;
  w.origin_t = b.t0 - params.border;
  w.signal.assign(w.shape.size(), 0.0);
  w.classes.assign(w.shape.size(), SampleClass::OuterUnknown);

  const Dims& d = volume.dims();
  auto in_cube = [&](int x, int y, int t) {
    return x >= b.x0 && x < b.x0 + b.sx && y >= b.y0 && y < b.y0 + b.sy && t >= b.t0 && t < b.t0 + b.st;
  };

  bool any_target = false;
  for (int m = 0; m < size; ++m) {
    const int x = w.origin_x + m;
    for (int n = 0; n < size; ++n) {
      const int y = w.origin_y + n;
      for (int p = 0; p < size; ++p) {
        const int t = w.origin_t + p;
        if (!d.contains(x, y, t)) continue;
        const std::size_t wi = w.shape.index(m, n, p);
        const std::size_t vi = d.index(x, y, t);
        w.signal[wi] = volume.samples()[vi];
        switch (mask.states()[vi]) {
          case SampleState::Known:
            w.classes[wi] = SampleClass::Available;
            break;
          case SampleState::Reconstructed:
            w.classes[wi] = SampleClass::Reconstructed;
            break;
          case SampleState::Unknown:
            if (in_cube(x, y, t)) {
              w.classes[wi] = SampleClass::CubeUnknown;
              any_target = true;
            } else {
              w.classes[wi] = SampleClass::OuterUnknown;
            }
            w.signal[wi] = 0.0;
            break;
        }
      }
    }
  }
  if (!any_target) throw std::invalid_argument("cube has no unknown samples to extrapolate");
  return w;
}

}  // namespace fse3d
