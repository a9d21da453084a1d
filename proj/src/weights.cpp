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

#include <cmath>

#include "fse3d/fse.hpp"

namespace fse3d {

double decay_weight(const WindowShape& shape, int m, int n, int p, double decay) {
  const double dm = m - (shape.m - 1) / 2.0;
  const double dn = n - (shape.n - 1) / 2.0;
  const double dp = p - (shape.p - 1) / 2.0;
  return std::pow(decay, std::sqrt(dm * dm + dn * dn + dp * dp));
}

WeightField build_weights(const ExtrapolationVolume& window, const FseParams& params) {
  params.validate();
  const WindowShape& shape = window.shape;
  if (window.classes.size() != shape.size() || window.signal.size() != shape.size()) {
    throw std::invalid_argument("window arrays do not match its shape");
  }

  WeightField field;
  field.shape = shape;
  field.weights.assign(shape.size(), 0.0);
  ComplexField spatial(shape.size());
  for (int m = 0; m < shape.m; ++m) {
    for (int n = 0; n < shape.n; ++n) {
      for (int p = 0; p < shape.p; ++p) {
        const std::size_t i = shape.index(m, n, p);
        double w = 0.0;
        switch (window.classes[i]) {
          case SampleClass::Available:
            w = decay_weight(shape, m, n, p, params.decay);
            break;
          case SampleClass::Reconstructed:
            w = params.reconstructed_weight * decay_weight(shape, m, n, p, params.decay);
            break;
          case SampleClass::CubeUnknown:
          case SampleClass::OuterUnknown:
            break;
        }
        field.weights[i] = w;
        spatial[i] = Complex(w, 0.0);
        field.dc += w;
      }
    }
  }
  if (!(field.dc > 0.0)) throw NoSupportError();

  Fft3d::for_shape(shape)->forward(spatial, field.spectrum);
  // The DC bin is the plain sum of the weights; keep it exactly real.
  field.spectrum[0] = Complex(field.dc, 0.0);
  return field;
}

}  // namespace fse3d
