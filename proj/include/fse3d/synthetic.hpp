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

#include "fse3d/core.hpp"

namespace fse3d {

/// Test sequence: two sinusoidal gratings drifting in different directions over
/// a diagonal luminance ramp. Samples stay inside [0, 255].
VideoVolume textured_sequence(const Dims& dims);

}  // namespace fse3d
