// Timing comparison of the serial reference paths against the production paths:
//   1. spatial-domain model (explicit projections) vs spectral model, per window
//   2. optimized-order fill on one thread vs the OpenMP team
//
// Usage: bench_fse [width height frames lenses]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "fse3d/fse.hpp"
#include "fse3d/patterns.hpp"
#include "fse3d/scheduler.hpp"
#include "fse3d/synthetic.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

fse3d::ExtrapolationVolume random_window(int size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(0.0, 255.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  fse3d::ExtrapolationVolume w;
  w.shape = {size, size, size};
  w.signal.resize(w.shape.size());
  w.classes.resize(w.shape.size());
  for (std::size_t i = 0; i < w.shape.size(); ++i) {
    const bool unknown = coin(rng) < 0.3;
    w.classes[i] = unknown ? fse3d::SampleClass::OuterUnknown : fse3d::SampleClass::Available;
    w.signal[i] = unknown ? 0.0 : value(rng);
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  fse3d::Dims dims{128, 128, 16};
  int lenses = 4;
  if (argc == 5) {
    dims = {std::atoi(argv[1]), std::atoi(argv[2]), std::atoi(argv[3])};
    lenses = std::atoi(argv[4]);
  }

  // Model paths on 8^3 windows.
  {
    fse3d::FseParams params;
    params.cube_edge = 4;
    params.border = 2;
    params.max_iterations = 20;
    std::mt19937_64 rng(11);
    constexpr int windows = 20;
    double t_fd = 0.0, t_sd = 0.0;
    for (int i = 0; i < windows; ++i) {
      const auto w = random_window(8, rng);
      const auto weights = fse3d::build_weights(w, params);
      auto start = Clock::now();
      const auto fd = fse3d::model_fd(w, weights, params);
      t_fd += seconds_since(start);
      start = Clock::now();
      const auto sd = fse3d::model_sd(w, weights, params);
      t_sd += seconds_since(start);
    }
    std::printf("model 8^3, nu=20      spatial %9.3f ms   spectral %9.3f ms   ratio %7.1fx\n",
                1e3 * t_sd / windows, 1e3 * t_fd / windows, t_sd / t_fd);
  }

  // Whole-volume fill.
  const auto original = fse3d::textured_sequence(dims);
  const auto mask = fse3d::gen_lenses(dims, lenses, 24.0, 4.0, 7);
  const int team = omp_get_max_threads();
  double serial = 0.0;
  for (int threads : {1, team}) {
    auto volume = original;
    auto work = mask;
    const auto start = Clock::now();
    const auto report = fse3d::run_fill(volume, work, fse3d::FseParams{}, fse3d::FillOrder::Optimized, threads);
    const double t = seconds_since(start);
    if (threads == 1) serial = t;
    std::printf("fill %dx%dx%d opt, %2d thread(s)   %8.2f s   %zu cubes   %zu batches   speedup %.2fx\n",
                dims.width, dims.height, dims.frames, threads, t, report.hole_cubes, report.batch_sizes.size(),
                serial / t);
    if (team == 1) break;
  }
  return 0;
}
