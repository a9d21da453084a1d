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

#include <functional>
#include <stdexcept>
#include <vector>

#include "fse3d/core.hpp"
#include "fse3d/fft.hpp"
#include "fse3d/params.hpp"
#include "fse3d/window.hpp"

namespace fse3d {

/// Raised when a window has no Available or Reconstructed sample to model from.
class NoSupportError : public std::runtime_error {
 public:
  NoSupportError() : std::runtime_error("extrapolation window has no support samples") {}
};

/// Neutral value written into cubes whose window has no support.
inline constexpr double kNoSupportFallback = 128.0;

/// Relative margin under which two candidate energies count as tied; ties go to
/// the lexicographically smallest (k, l, q).
inline constexpr double kTieTolerance = 1e-10;

/// w[m,n,p] and its spectrum W[k,l,q].
struct WeightField {
  WindowShape shape;
  std::vector<double> weights;
  ComplexField spectrum;
  double dc = 0.0;  ///< W[0,0,0] = sum of weights

  [[nodiscard]] bool has_support() const { return dc > 0.0; }
};

/// Distance decay rho-hat^d, d measured from the window centre ((M-1)/2, (N-1)/2, (P-1)/2).
double decay_weight(const WindowShape& shape, int m, int n, int p, double decay);

/// Builds w: decay on Available, delta * decay on Reconstructed, 0 elsewhere.
/// Throws NoSupportError when every weight is zero.
WeightField build_weights(const ExtrapolationVolume& window, const FseParams& params);

/// One basis-function selection.
struct Selection {
  int k = 0;
  int l = 0;
  int q = 0;
  Complex coefficient;  ///< c-hat added for phi_(k,l,q)
};

/// Model-generation state of the spectral path.
struct SpectralState {
  int iteration = 0;
  ComplexField model_spectrum;     ///< G
  ComplexField weighted_residual;  ///< R_w
  std::vector<Selection> selections;
};

/// Per-iteration hook for the spectral path, called after each update.
using SpectralObserver = std::function<void(const SpectralState&)>;

/// Per-iteration hook for the spatial path: iteration index, model g and residual r (complex, over L).
using SpatialObserver = std::function<void(int, const ComplexField&, const ComplexField&)>;

struct ModelResult {
  std::vector<double> model;  ///< Re g[m,n,p] over the whole window
  SpectralState state;
};

/// Frequency-domain model generation (production path).
ModelResult model_fd(const ExtrapolationVolume& window, const WeightField& weights, const FseParams& params,
                     const SpectralObserver& observer = {});

/// Spatial-domain model generation with explicit basis functions and projections.
/// Quadratic in the window size; meant as a reference for small windows.
std::vector<double> model_sd(const ExtrapolationVolume& window, const WeightField& weights,
                             const FseParams& params, const SpatialObserver& observer = {},
                             std::vector<Selection>* selections = nullptr);

struct CubeFill {
  std::vector<double> values;  ///< one per UNKNOWN sample of the cube, unclamped
  bool no_support = false;
};

/// Models the window around `cube` and returns the model at its UNKNOWN samples,
/// ordered as unknown_samples().
CubeFill fill_cube(const VideoVolume& volume, const HoleMask& mask, const CubeGrid& grid, CubeId cube,
                   const FseParams& params);

}  // namespace fse3d
