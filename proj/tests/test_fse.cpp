#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fse3d/fse.hpp"
#include "test_support.hpp"

using namespace fse3d;
using fse3d::testing::make_window;
using fse3d::testing::mask_with_hole_cubes;
using fse3d::testing::naive_dft;
using fse3d::testing::random_window;

namespace {

FseParams small_params(int iterations = 20) {
  FseParams p;
  p.cube_edge = 4;
  p.border = 2;
  p.max_iterations = iterations;
  return p;
}

// Default-size window: one cube of CubeUnknown in the centre, everything else `cls` with value c.
ExtrapolationVolume centred_constant_window(double c, int size = 32, int border = 14, int edge = 4,
                                            SampleClass cls = SampleClass::Available) {
  auto w = make_window(WindowShape{size, size, size}, cls, [&](int, int, int) { return c; });
  for (int m = border; m < border + edge; ++m)
    for (int n = border; n < border + edge; ++n)
      for (int p = border; p < border + edge; ++p) {
        w.classes[w.shape.index(m, n, p)] = SampleClass::CubeUnknown;
        w.signal[w.shape.index(m, n, p)] = 0.0;
      }
  return w;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("weights follow the decay on A, delta times the decay on R, zero elsewhere") {
  const FseParams params;
  auto w = centred_constant_window(1.0);
  const std::size_t probe = w.shape.index(15, 15, 15);
  w.classes[probe] = SampleClass::Available;

  const double expected = std::pow(0.7, std::sqrt(0.75));  // offsets of -0.5 from the centre 15.5
  auto field = build_weights(w, params);
  CHECK(field.weights[probe] == doctest::Approx(0.7342618557067149).epsilon(1e-12));
  CHECK(field.weights[probe] == doctest::Approx(expected).epsilon(1e-12));

  w.classes[probe] = SampleClass::Reconstructed;
  field = build_weights(w, params);
  CHECK(field.weights[probe] == doctest::Approx(0.5 * expected).epsilon(1e-12));

  for (std::size_t i = 0; i < w.classes.size(); ++i) {
    if (w.classes[i] == SampleClass::CubeUnknown || w.classes[i] == SampleClass::OuterUnknown) {
      CHECK(field.weights[i] == 0.0);
    }
  }
}

TEST_CASE("weight spectrum: DC is the weight sum and bounds every bin") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto w = random_window(rng, 8, 2, 4);
    const auto field = build_weights(w, small_params());
    double sum = 0.0;
    for (double x : field.weights) sum += x;
    CHECK(field.dc == doctest::Approx(sum).epsilon(1e-14));
    CHECK(field.spectrum[0].imag() == 0.0);
    for (const auto& bin : field.spectrum) CHECK(std::abs(bin) <= field.dc * (1.0 + 1e-12));
  }
}

TEST_CASE("build_weights signals missing support") {
  auto w = make_window(WindowShape{8, 8, 8}, SampleClass::OuterUnknown, [](int, int, int) { return 0.0; });
  w.classes[0] = SampleClass::CubeUnknown;
  CHECK_THROWS_AS(build_weights(w, small_params()), NoSupportError);
}

TEST_CASE("zero signal gives a zero model") {
  const auto w = centred_constant_window(0.0, 8, 2, 4);
  const auto params = small_params(5);
  const auto weights = build_weights(w, params);
  const auto r = model_fd(w, weights, params);
  for (double g : r.model) CHECK(g == 0.0);
  for (const auto& s : r.state.selections) CHECK(s.coefficient == Complex(0.0, 0.0));
}

TEST_CASE("constant signal follows c * (1 - (1 - gamma)^nu) on both paths") {
  auto params = small_params(3);
  const auto w = centred_constant_window(100.0, 8, 2, 4);
  const auto weights = build_weights(w, params);
  const auto fd = model_fd(w, weights, params);
  const auto sd = model_sd(w, weights, params);
  for (std::size_t i = 0; i < fd.model.size(); ++i) {
    CHECK(fd.model[i] == doctest::Approx(87.5).epsilon(1e-12));
    CHECK(sd[i] == doctest::Approx(87.5).epsilon(1e-12));
  }
  // DC is picked every time.
  for (const auto& s : fd.state.selections) CHECK((s.k == 0 && s.l == 0 && s.q == 0));

  params.max_iterations = 1;
  const auto once = model_fd(w, weights, params);
  for (double g : once.model) CHECK(g == doctest::Approx(0.5 * 100.0).epsilon(1e-12));
}

TEST_CASE("constant signal stays on DC with Reconstructed support mixed in") {
  auto w = centred_constant_window(42.0);
  for (std::size_t i = 0; i < w.classes.size(); i += 3) {
    if (w.classes[i] == SampleClass::Available) w.classes[i] = SampleClass::Reconstructed;
  }
  FseParams params;
  params.max_iterations = 10;
  const auto r = model_fd(w, build_weights(w, params), params);
  for (const auto& s : r.state.selections) CHECK((s.k == 0 && s.l == 0 && s.q == 0));
  CHECK(r.model[w.shape.index(15, 15, 15)] == doctest::Approx(42.0 * (1.0 - std::pow(0.5, 10))).epsilon(1e-9));
}

TEST_CASE("spectral path matches the spatial reference on random windows") {
  std::mt19937_64 rng(2024);
  const auto params = small_params(20);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = random_window(rng, 8, 2, 4);
    const auto weights = build_weights(w, params);
    std::vector<Selection> sd_sel;
    const auto fd = model_fd(w, weights, params);
    const auto sd = model_sd(w, weights, params, {}, &sd_sel);
    const double scale = std::max(1.0, *std::max_element(w.signal.begin(), w.signal.end()));
    CHECK(max_abs_diff(fd.model, sd) <= 1e-6 * scale);
    REQUIRE(sd_sel.size() == fd.state.selections.size());
    for (std::size_t i = 0; i < sd_sel.size(); ++i) {
      CHECK(sd_sel[i].k == fd.state.selections[i].k);
      CHECK(sd_sel[i].l == fd.state.selections[i].l);
      CHECK(sd_sel[i].q == fd.state.selections[i].q);
    }
  }
}

TEST_CASE("non-power-of-two windows agree with the reference") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> value(0.0, 255.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const WindowShape shape{6, 5, 7};
  auto w = make_window(shape, SampleClass::Available, [&](int, int, int) { return value(rng); });
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (unit(rng) < 0.3) {
      w.classes[i] = SampleClass::OuterUnknown;
      w.signal[i] = 0.0;
    }
  }
  w.classes[shape.index(3, 2, 3)] = SampleClass::CubeUnknown;
  const auto params = small_params(15);
  const auto weights = build_weights(w, params);
  CHECK(max_abs_diff(model_fd(w, weights, params).model, model_sd(w, weights, params)) <= 1e-6 * 255.0);
}

TEST_CASE("a single cosine on a fully known window selects (1,0,0)") {
  const WindowShape shape{8, 8, 8};
  const auto w = make_window(shape, SampleClass::Available,
                             [](int m, int, int) { return std::cos(2.0 * std::numbers::pi * m / 8.0); });
  auto params = small_params(1);
  params.compensation = 1.0;
  const auto weights = build_weights(w, params);
  std::vector<Selection> sel;
  model_sd(w, weights, params, {}, &sel);
  const auto fd = model_fd(w, weights, params);
  REQUIRE(sel.size() == 1);
  CHECK(sel[0].k == 1);
  CHECK(sel[0].l == 0);
  CHECK(sel[0].q == 0);
  CHECK(fd.state.selections[0].k == 1);
  CHECK(fd.state.selections[0].l == 0);
  CHECK(fd.state.selections[0].q == 0);
}

TEST_CASE("ties resolve to the lexicographically smallest index") {
  // A real cosine has equal energy at k and M-k; (1,0,0) must win over (7,0,0)
  // on every repetition, and repeated selection of an index is allowed.
  const WindowShape shape{8, 8, 8};
  const auto w = make_window(shape, SampleClass::Available,
                             [](int m, int, int) { return 10.0 * std::cos(2.0 * std::numbers::pi * m / 8.0); });
  const auto params = small_params(4);
  const auto r = model_fd(w, build_weights(w, params), params);
  CHECK(r.state.selections[0].k == 1);
  const auto again = model_fd(w, build_weights(w, params), params);
  for (std::size_t i = 0; i < r.state.selections.size(); ++i) {
    CHECK(r.state.selections[i].k == again.state.selections[i].k);
    CHECK(r.state.selections[i].coefficient == again.state.selections[i].coefficient);
  }
}

TEST_CASE("non-finite samples are rejected") {
  auto w = centred_constant_window(5.0, 8, 2, 4);
  const auto params = small_params();
  const auto weights = build_weights(w, params);
  w.signal[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(model_fd(w, weights, params), std::invalid_argument);
  CHECK_THROWS_AS(model_sd(w, weights, params), std::invalid_argument);
}

TEST_CASE("weighted residual energy never increases") {
  std::mt19937_64 rng(8);
  const auto params = small_params(20);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = random_window(rng, 8, 2, 4);
    const auto weights = build_weights(w, params);
    const auto fft = Fft3d::for_shape(w.shape);
    double previous = 0.0;
    for (std::size_t i = 0; i < w.signal.size(); ++i) previous += weights.weights[i] * w.signal[i] * w.signal[i];
    model_fd(w, weights, params, [&](const SpectralState& state) {
      ComplexField g;
      fft->inverse(state.model_spectrum, g);
      double energy = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const Complex r = w.signal[i] - g[i] / static_cast<double>(g.size());
        energy += weights.weights[i] * std::norm(r);
      }
      CHECK(energy <= previous * (1.0 + 1e-12));
      previous = energy;
    });
  }
}

TEST_CASE("spectral state equals the transform of the spatial residual at every iteration") {
  std::mt19937_64 rng(9);
  const auto params = small_params(12);
  const auto w = random_window(rng, 8, 2, 4);
  const auto weights = build_weights(w, params);
  const WindowShape& shape = w.shape;
  const double size = static_cast<double>(shape.size());

  model_fd(w, weights, params, [&](const SpectralState& state) {
    // Model from its spectrum, by direct inverse DFT.
    const ComplexField g = naive_dft(state.model_spectrum, shape, +1);
    ComplexField rw(shape.size());
    double spatial_energy = 0.0;
    for (std::size_t i = 0; i < rw.size(); ++i) {
      rw[i] = (w.signal[i] - g[i] / size) * weights.weights[i];
      spatial_energy += std::norm(rw[i]);
    }
    const ComplexField expected = naive_dft(rw, shape, -1);
    double scale = 0.0, err = 0.0, spectral_energy = 0.0;
    for (std::size_t i = 0; i < rw.size(); ++i) {
      scale = std::max(scale, std::abs(expected[i]));
      err = std::max(err, std::abs(expected[i] - state.weighted_residual[i]));
      spectral_energy += std::norm(state.weighted_residual[i]);
    }
    CHECK(err <= 1e-9 * scale);
    // Parseval.
    CHECK(spatial_energy == doctest::Approx(spectral_energy / size).epsilon(1e-9));
  });
}

TEST_CASE("spatial observer reports model plus residual equal to the signal") {
  std::mt19937_64 rng(12);
  const auto params = small_params(5);
  const auto w = random_window(rng, 8, 2, 4);
  const auto weights = build_weights(w, params);
  int calls = 0;
  model_sd(w, weights, params, [&](int it, const ComplexField& g, const ComplexField& r) {
    CHECK(it == ++calls);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(g[i] + r[i] - w.signal[i]) < 1e-9);
  });
  CHECK(calls == 5);
}

TEST_CASE("fill_cube reconstructs a hole in a constant region") {
  const Dims d{48, 48, 40};
  VideoVolume v(d, 128.0);
  HoleMask m = mask_with_hole_cubes(d, 4, {{5, 5, 5}});
  const CubeGrid g = partition(v, m, 4);
  const auto fill = fill_cube(v, m, g, g.id({5, 5, 5}), FseParams{});
  CHECK_FALSE(fill.no_support);
  REQUIRE(fill.values.size() == 64);
  for (double x : fill.values) CHECK(std::abs(x - 128.0) < 0.5);
}

TEST_CASE("fill_cube falls back when the window has no support") {
  const Dims d{8, 8, 8};
  VideoVolume v(d, 77.0);
  HoleMask m(d, SampleState::Unknown);
  const CubeGrid g = partition(v, m, 4);
  const auto fill = fill_cube(v, m, g, 0, FseParams{});
  CHECK(fill.no_support);
  REQUIRE(fill.values.size() == 64);
  for (double x : fill.values) CHECK(x == kNoSupportFallback);
}

TEST_CASE("fill_cube reconstructs a horizontal cosine whose period divides the window") {
  const Dims d{48, 48, 40};
  VideoVolume v(d);
  for (int t = 0; t < d.frames; ++t)
    for (int y = 0; y < d.height; ++y)
      for (int x = 0; x < d.width; ++x) v.at(x, y, t) = 128.0 + 100.0 * std::cos(2.0 * std::numbers::pi * x / 8.0);
  const VideoVolume original = v;
  HoleMask m = mask_with_hole_cubes(d, 4, {{5, 5, 5}});
  const CubeGrid g = partition(v, m, 4);
  const CubeId c = g.id({5, 5, 5});
  const auto positions = unknown_samples(m, g, c);
  const auto fill = fill_cube(v, m, g, c, FseParams{});
  double worst = 0.0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    worst = std::max(worst, std::abs(fill.values[i] - original.samples()[positions[i]]));
  }
  MESSAGE("max cosine reconstruction error: " << worst);
  CHECK(worst < 1.0);
}
