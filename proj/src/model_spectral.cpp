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
#include <stdexcept>

#include "fse3d/fse.hpp"

namespace fse3d {
namespace {

struct Peak {
  std::size_t index = 0;
  double energy = -1.0;
};

// Storage is row-major in (k, l, q), so a forward scan visits indices in
// lexicographic order and a later bin must beat the incumbent by the tie margin.
inline void consider(Peak& peak, std::size_t index, double energy) {
  if (energy > peak.energy * (1.0 + kTieTolerance) || peak.energy < 0.0) {
    peak.index = index;
    peak.energy = energy;
  }
}

inline double energy_of(const Complex& c) { return c.real() * c.real() + c.imag() * c.imag(); }

Peak find_peak(const ComplexField& field) {
  Peak peak;
  for (std::size_t i = 0; i < field.size(); ++i) consider(peak, i, energy_of(field[i]));
  return peak;
}

// R_w[k,l,q] -= c * W[k-u, l-v, q-z] (indices mod the shape), fused with the
// search for the next peak. Rows are updated branch-free; only a row whose
// maximum beats the incumbent is rescanned with the tie rule.
Peak subtract_shifted(ComplexField& residual, const ComplexField& spectrum, const WindowShape& shape, int u, int v,
                      int z, Complex c) {
  const double cr = c.real();
  const double ci = c.imag();
  const auto row_len = static_cast<std::size_t>(shape.p);
  std::vector<double> energy(row_len);
  Peak peak;
  for (int k = 0; k < shape.m; ++k) {
    const int kk = (k - u + shape.m) % shape.m;
    for (int l = 0; l < shape.n; ++l) {
      const int ll = (l - v + shape.n) % shape.n;
      const std::size_t base = shape.index(k, l, 0);
      auto* row = reinterpret_cast<double*>(residual.data() + base);
      const auto* wrow = reinterpret_cast<const double*>(spectrum.data() + shape.index(kk, ll, 0));
      double* e = energy.data();
      auto update = [&](std::size_t first, std::size_t last, std::size_t shift) {
        for (std::size_t q = first; q < last; ++q) {
          const std::size_t qq = q + shift;
          const double wr = wrow[2 * qq];
          const double wi = wrow[2 * qq + 1];
          const double re = row[2 * q] - (cr * wr - ci * wi);
          const double im = row[2 * q + 1] - (cr * wi + ci * wr);
          row[2 * q] = re;
          row[2 * q + 1] = im;
          e[q] = re * re + im * im;
        }
      };
      const auto zs = static_cast<std::size_t>(z);
      update(0, zs, row_len - zs);
      update(zs, row_len, static_cast<std::size_t>(0) - zs);

      double row_max = e[0];
      for (std::size_t q = 1; q < row_len; ++q) row_max = row_max > e[q] ? row_max : e[q];
      if (peak.energy < 0.0 || row_max > peak.energy * (1.0 + kTieTolerance)) {
        for (std::size_t q = 0; q < row_len; ++q) consider(peak, base + q, e[q]);
      }
    }
  }
  return peak;
}

void check_inputs(const ExtrapolationVolume& window, const WeightField& weights, const FseParams& params) {
  params.validate();
  if (weights.shape != window.shape || weights.weights.size() != window.shape.size() ||
      window.signal.size() != window.shape.size()) {
    throw std::invalid_argument("window and weight field shapes differ");
  }
  if (!weights.has_support()) throw NoSupportError();
  for (double s : window.signal) {
    if (!std::isfinite(s)) throw std::invalid_argument("window holds a non-finite sample");
  }
}

}  // namespace

ModelResult model_fd(const ExtrapolationVolume& window, const WeightField& weights, const FseParams& params,
                     const SpectralObserver& observer) {
  check_inputs(window, weights, params);
  const WindowShape& shape = window.shape;
  const std::size_t size = shape.size();
  const auto fft = Fft3d::for_shape(shape);

  ComplexField weighted(size);
  for (std::size_t i = 0; i < size; ++i) weighted[i] = Complex(window.signal[i] * weights.weights[i], 0.0);

  ModelResult result;
  SpectralState& state = result.state;
  state.model_spectrum.assign(size, Complex(0.0, 0.0));
  fft->forward(weighted, state.weighted_residual);
  state.selections.reserve(static_cast<std::size_t>(params.max_iterations));

  const double volume_factor = static_cast<double>(size);
  Peak peak = find_peak(state.weighted_residual);
  for (int it = 0; it < params.max_iterations; ++it) {
    const std::size_t sel = peak.index;
    const int z = static_cast<int>(sel % static_cast<std::size_t>(shape.p));
    const int v = static_cast<int>((sel / static_cast<std::size_t>(shape.p)) % static_cast<std::size_t>(shape.n));
    const int u = static_cast<int>(sel / (static_cast<std::size_t>(shape.p) * static_cast<std::size_t>(shape.n)));

    const Complex coeff = params.compensation * state.weighted_residual[sel] / weights.dc;
    state.model_spectrum[sel] += volume_factor * coeff;
    peak = subtract_shifted(state.weighted_residual, weights.spectrum, shape, u, v, z, coeff);

    state.iteration = it + 1;
    state.selections.push_back(Selection{u, v, z, coeff});
    if (observer) observer(state);
  }

  ComplexField spatial;
  fft->inverse(state.model_spectrum, spatial);
  result.model.resize(size);
  for (std::size_t i = 0; i < size; ++i) result.model[i] = spatial[i].real() / volume_factor;
  return result;
}

}  // namespace fse3d
