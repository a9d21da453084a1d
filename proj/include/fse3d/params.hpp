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

#include <stdexcept>
#include <string>

namespace fse3d {

/// Model-generation parameters. Defaults reproduce the reference evaluation setup:
/// 4^3 cubes, border 14 (32^3 transform), decay 0.7, gamma = delta = 0.5.
struct FseParams {
  int cube_edge = 4;
  int border = 14;
  double decay = 0.7;                 ///< rho-hat, base of the distance decay, in (0,1)
  double reconstructed_weight = 0.5;  ///< delta, discount of previously filled samples, in [0,1]
  double compensation = 0.5;          ///< gamma, orthogonality deficiency compensation, in (0,1]
  int max_iterations = 100;           ///< nu_max

  [[nodiscard]] int window_size() const { return cube_edge + 2 * border; }

  void validate() const {
    if (cube_edge < 1) throw std::invalid_argument("cube edge must be >= 1");
    if (border < 0) throw std::invalid_argument("border width must be >= 0");
    if (!(decay > 0.0 && decay < 1.0)) throw std::invalid_argument("decay must lie in (0,1)");
    if (!(reconstructed_weight >= 0.0 && reconstructed_weight <= 1.0))
      throw std::invalid_argument("reconstructed weight must lie in [0,1]");
    if (!(compensation > 0.0 && compensation <= 1.0))
      throw std::invalid_argument("compensation factor must lie in (0,1]");
    if (max_iterations < 1) throw std::invalid_argument("max iterations must be >= 1");
  }
};

}  // namespace fse3d
