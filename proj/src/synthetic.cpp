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

#include "fse3d/synthetic.hpp"

#include <cmath>
#include <numbers>

namespace fse3d {

VideoVolume textured_sequence(const Dims& dims) {
  VideoVolume v(dims);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double ramp_scale = 76.0 / (dims.width + dims.height);
  for (int t = 0; t < dims.frames; ++t) {
    for (int y = 0; y < dims.height; ++y) {
      for (int x = 0; x < dims.width; ++x) {
        const double grating_a = 40.0 * std::sin(two_pi * (0.8 * x + 0.6 * y) / 16.0 - 0.35 * t);
        const double grating_b = 30.0 * std::sin(two_pi * (-0.5 * x + 0.866 * y) / 11.0 + 0.5 * t);
        const double ramp = ramp_scale * (x + y) - 38.0;
        v.at(x, y, t) = clamp_sample(128.0 + grating_a + grating_b + ramp);
      }
    }
  }
  return v;
}

}  // namespace fse3d
