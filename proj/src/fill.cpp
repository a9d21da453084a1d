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

#include "fse3d/fse.hpp"

namespace fse3d {

CubeFill fill_cube(const VideoVolume& volume, const HoleMask& mask, const CubeGrid& grid, CubeId cube,
                   const FseParams& params) {
  const ExtrapolationVolume window = extract_window(volume, mask, grid, cube, params);
  const auto positions = unknown_samples(mask, grid, cube);

  CubeFill fill;
  WeightField weights;
  try {
    weights = build_weights(window, params);
  } catch (const NoSupportError&) {
    fill.values.assign(positions.size(), kNoSupportFallback);
    fill.no_support = true;
    return fill;
  }

  const ModelResult result = model_fd(window, weights, params);
  const Dims& d = volume.dims();
  const auto plane = static_cast<std::size_t>(d.width) * static_cast<std::size_t>(d.height);
  fill.values.reserve(positions.size());
  for (std::size_t pos : positions) {
    const int x = static_cast<int>(pos % static_cast<std::size_t>(d.width));
    const int y = static_cast<int>((pos / static_cast<std::size_t>(d.width)) % static_cast<std::size_t>(d.height));
    const int t = static_cast<int>(pos / plane);
    fill.values.push_back(
        result.model[window.shape.index(x - window.origin_x, y - window.origin_y, t - window.origin_t)]);
  }
  return fill;
}

}  // namespace fse3d
