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
#include <numbers>
#include <stdexcept>

#include "fse3d/fse.hpp"

namespace fse3d {
namespace {

// e^{+j 2 pi k m / size} for all k, m (row k).
std::vector<Complex> axis_phases(int size) {
  std::vector<Complex> table(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) {
    for (int m = 0; m < size; ++m) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(k) * m) % size) / size;
      table[static_cast<std::size_t>(k) * static_cast<std::size_t>(size) + static_cast<std::size_t>(m)] =
          Complex(std::cos(angle), std::sin(angle));
    }
  }
  return table;
}

}  // namespace

std::vector<double> model_sd(const ExtrapolationVolume& window, const WeightField& weights,
                             const FseParams& params, const SpatialObserver& observer,
                             std::vector<Selection>* selections) {
  params.validate();
  const WindowShape& shape = window.shape;
  if (weights.weights.size() != shape.size() || window.signal.size() != shape.size()) {
    throw std::invalid_argument("window and weight field shapes differ");
  }
  for (double s : window.signal) {
    if (!std::isfinite(s)) throw std::invalid_argument("window holds a non-finite sample");
  }
  double total_weight = 0.0;
  for (double w : weights.weights) total_weight += w;
  if (!(total_weight > 0.0)) throw NoSupportError();

  const auto phase_m = axis_phases(shape.m);
  const auto phase_n = axis_phases(shape.n);
  const auto phase_p = axis_phases(shape.p);
  auto basis = [&](int k, int l, int q, int m, int n, int p) {
    return phase_m[static_cast<std::size_t>(k * shape.m + m)] * phase_n[static_cast<std::size_t>(l * shape.n + n)] *
           phase_p[static_cast<std::size_t>(q * shape.p + p)];
  };

  const std::size_t size = shape.size();
  ComplexField model(size, Complex(0.0, 0.0));
  ComplexField residual(size);
  for (std::size_t i = 0; i < size; ++i) residual[i] = Complex(window.signal[i], 0.0);

  for (int it = 0; it < params.max_iterations; ++it) {
    // Weighted projection of the residual onto every basis function, and the
    // selection criterion |p|^2 * sum |phi|^2 w.
    double best_energy = -1.0;
    Complex best_projection;
    int bu = 0, bv = 0, bz = 0;
    for (int k = 0; k < shape.m; ++k) {
      for (int l = 0; l < shape.n; ++l) {
        for (int q = 0; q < shape.p; ++q) {
          Complex numerator(0.0, 0.0);
          double denominator = 0.0;
          for (int m = 0; m < shape.m; ++m) {
            for (int n = 0; n < shape.n; ++n) {
              for (int p = 0; p < shape.p; ++p) {
                const std::size_t i = shape.index(m, n, p);
                const double w = weights.weights[i];
                if (w == 0.0) continue;
                const Complex phi = basis(k, l, q, m, n, p);
                numerator += residual[i] * std::conj(phi) * w;
                denominator += std::norm(phi) * w;
              }
            }
          }
          const Complex projection = numerator / denominator;
          const double energy = std::norm(projection) * denominator;
          if (best_energy < 0.0 || energy > best_energy * (1.0 + kTieTolerance)) {
            best_energy = energy;
            best_projection = projection;
            bu = k;
            bv = l;
            bz = q;
          }
        }
      }
    }

    const Complex coeff = params.compensation * best_projection;
    for (int m = 0; m < shape.m; ++m) {
      for (int n = 0; n < shape.n; ++n) {
        for (int p = 0; p < shape.p; ++p) {
          const std::size_t i = shape.index(m, n, p);
          const Complex term = coeff * basis(bu, bv, bz, m, n, p);
          model[i] += term;
          residual[i] -= term;
        }
      }
    }
    if (selections != nullptr) selections->push_back(Selection{bu, bv, bz, coeff});
    if (observer) observer(it + 1, model, residual);
  }

  std::vector<double> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = model[i].real();
  return out;
}

}  // namespace fse3d
