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

#include <complex>
#include <memory>
#include <vector>

#include "fse3d/window.hpp"

namespace fse3d {

using Complex = std::complex<double>;
using ComplexField = std::vector<Complex>;

/// Unnormalized 3D DFT over a WindowShape (row-major, p fastest).
///
/// forward: X[k,l,q] = sum x[m,n,p] e^{-j2pi(km/M + ln/N + qp/P)}
/// inverse: x[m,n,p] = sum X[k,l,q] e^{+j2pi(...)}   (no 1/MNP factor)
///
/// Plans are created once per shape and shared; executing is thread-safe and
/// produces bit-identical output regardless of buffer alignment or calling thread.
class Fft3d {
 public:
  /// Shared transform for `shape`, planned on first use.
  static std::shared_ptr<const Fft3d> for_shape(const WindowShape& shape);

  ~Fft3d();
  Fft3d(const Fft3d&) = delete;
  Fft3d& operator=(const Fft3d&) = delete;

  [[nodiscard]] const WindowShape& shape() const { return shape_; }

  void forward(const ComplexField& in, ComplexField& out) const;
  void inverse(const ComplexField& in, ComplexField& out) const;

 private:
  explicit Fft3d(const WindowShape& shape);

  WindowShape shape_;
  void* forward_plan_ = nullptr;
  void* inverse_plan_ = nullptr;
};

}  // namespace fse3d
