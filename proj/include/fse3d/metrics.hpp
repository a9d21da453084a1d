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
#include <vector>

#include "fse3d/core.hpp"

namespace fse3d {

/// Display value for PSNR of identical signals.
inline constexpr double kPsnrCap = 99.99;

struct PsnrResult {
  double db = 0.0;  ///< kPsnrCap when identical
  bool identical = false;
  double mse = 0.0;
  std::size_t samples = 0;
};

/// PSNR pooled over every hole sample (UNKNOWN or RECONSTRUCTED in `mask`), peak 255.
PsnrResult psnr_over_holes(const VideoVolume& original, const VideoVolume& reconstructed, const HoleMask& mask);

struct SsimResult {
  std::vector<double> per_frame;
  double mean = 0.0;
};

/// Single-scale SSIM on one frame: 11x11 Gaussian window, sigma 1.5,
/// K1 = 0.01, K2 = 0.03, L = 255, averaged over all fully-inside window positions.
double ssim_frame(const VideoVolume& a, const VideoVolume& b, int frame);

SsimResult ssim_per_frame(const VideoVolume& original, const VideoVolume& reconstructed);

struct QualityReport {
  PsnrResult psnr;
  SsimResult ssim;
};

QualityReport evaluate(const VideoVolume& original, const VideoVolume& reconstructed, const HoleMask& mask);

}  // namespace fse3d
