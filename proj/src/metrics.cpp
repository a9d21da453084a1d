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

#include "fse3d/metrics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace fse3d {
namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::array<double, kWindow * kWindow> gaussian_window() {
  std::array<double, kWindow * kWindow> g{};
  double total = 0.0;
  const int half = kWindow / 2;
  for (int j = 0; j < kWindow; ++j) {
    for (int i = 0; i < kWindow; ++i) {
      const double dx = i - half;
      const double dy = j - half;
      const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * kSigma * kSigma));
      g[static_cast<std::size_t>(j * kWindow + i)] = v;
      total += v;
    }
  }
  for (double& v : g) v /= total;
  return g;
}

}  // namespace

PsnrResult psnr_over_holes(const VideoVolume& original, const VideoVolume& reconstructed, const HoleMask& mask) {
  if (original.dims() != reconstructed.dims() || original.dims() != mask.dims()) {
    throw std::invalid_argument("metric inputs have different dimensions");
  }
  const auto a = original.samples();
  const auto b = reconstructed.samples();
  const auto states = mask.states();
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == SampleState::Known) continue;
    const double e = a[i] - b[i];
    sum += e * e;
    ++n;
  }
  if (n == 0) throw std::invalid_argument("mask has no hole samples");

  PsnrResult r;
  r.samples = n;
  r.mse = sum / static_cast<double>(n);
  if (r.mse == 0.0) {
    r.identical = true;
    r.db = kPsnrCap;
  } else {
    r.db = 10.0 * std::log10(kSampleMax * kSampleMax / r.mse);
  }
  return r;
}

double ssim_frame(const VideoVolume& a, const VideoVolume& b, int frame) {
  const Dims& d = a.dims();
  if (d != b.dims()) throw std::invalid_argument("metric inputs have different dimensions");
  if (d.width < kWindow || d.height < kWindow) throw std::invalid_argument("frame smaller than the SSIM window");
  if (frame < 0 || frame >= d.frames) throw std::out_of_range("frame index out of range");

  static const auto g = gaussian_window();
  double total = 0.0;
  std::size_t windows = 0;
  for (int y0 = 0; y0 + kWindow <= d.height; ++y0) {
    for (int x0 = 0; x0 + kWindow <= d.width; ++x0) {
      double mu_a = 0.0, mu_b = 0.0, aa = 0.0, bb = 0.0, ab = 0.0;
      for (int j = 0; j < kWindow; ++j) {
        for (int i = 0; i < kWindow; ++i) {
          const double w = g[static_cast<std::size_t>(j * kWindow + i)];
          const double va = a.at(x0 + i, y0 + j, frame);
          const double vb = b.at(x0 + i, y0 + j, frame);
          mu_a += w * va;
          mu_b += w * vb;
          aa += w * (va * va);
          bb += w * (vb * vb);
          ab += w * (va * vb);
        }
      }
      const double var_a = aa - mu_a * mu_a;
      const double var_b = bb - mu_b * mu_b;
      const double cov = ab - mu_a * mu_b;
      total += ((2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2)) /
               ((mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2));
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

SsimResult ssim_per_frame(const VideoVolume& original, const VideoVolume& reconstructed) {
  if (original.dims() != reconstructed.dims()) throw std::invalid_argument("metric inputs have different dimensions");
  SsimResult r;
  double sum = 0.0;
  for (int t = 0; t < original.dims().frames; ++t) {
    r.per_frame.push_back(ssim_frame(original, reconstructed, t));
    sum += r.per_frame.back();
  }
  r.mean = sum / static_cast<double>(r.per_frame.size());
  return r;
}

QualityReport evaluate(const VideoVolume& original, const VideoVolume& reconstructed, const HoleMask& mask) {
  return QualityReport{psnr_over_holes(original, reconstructed, mask), ssim_per_frame(original, reconstructed)};
}

}  // namespace fse3d
