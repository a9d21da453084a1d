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

#include "fse3d/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fse3d {
namespace {

// The FFTW planner is not reentrant; every plan create/destroy goes through this.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }
fftw_complex* as_fftw(const Complex* p) { return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p)); }

}  // namespace

Fft3d::Fft3d(const WindowShape& shape) : shape_(shape) {
  if (shape.m < 1 || shape.n < 1 || shape.p < 1) throw std::invalid_argument("transform shape must be positive");
  // FFTW_ESTIMATE keeps plan selection deterministic; FFTW_UNALIGNED makes the
  // chosen codelets independent of where a given buffer happens to live.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_complex* scratch_in = fftw_alloc_complex(shape.size());
  fftw_complex* scratch_out = fftw_alloc_complex(shape.size());
  forward_plan_ = fftw_plan_dft_3d(shape.m, shape.n, shape.p, scratch_in, scratch_out, FFTW_FORWARD, flags);
  inverse_plan_ = fftw_plan_dft_3d(shape.m, shape.n, shape.p, scratch_in, scratch_out, FFTW_BACKWARD, flags);
  fftw_free(scratch_in);
  fftw_free(scratch_out);
  if (forward_plan_ == nullptr || inverse_plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
}

Fft3d::~Fft3d() {
  std::lock_guard lock(planner_mutex());
  if (forward_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  if (inverse_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

std::shared_ptr<const Fft3d> Fft3d::for_shape(const WindowShape& shape) {
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Fft3d>> cache;
  std::lock_guard lock(planner_mutex());
  auto key = std::make_tuple(shape.m, shape.n, shape.p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const Fft3d> plan(new Fft3d(shape));
  cache.emplace(key, plan);
  return plan;
}

void Fft3d::forward(const ComplexField& in, ComplexField& out) const {
  if (in.size() != shape_.size()) throw std::invalid_argument("transform input size mismatch");
  if (&in == &out) throw std::invalid_argument("transform must be out of place");
  out.resize(shape_.size());
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(in.data()), as_fftw(out.data()));
}

void Fft3d::inverse(const ComplexField& in, ComplexField& out) const {
  if (in.size() != shape_.size()) throw std::invalid_argument("transform input size mismatch");
  if (&in == &out) throw std::invalid_argument("transform must be out of place");
  out.resize(shape_.size());
  fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_), as_fftw(in.data()), as_fftw(out.data()));
}

}  // namespace fse3d
