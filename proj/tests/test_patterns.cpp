#include <doctest.h>

#include "fse3d/patterns.hpp"

using namespace fse3d;

TEST_CASE("diagonal bars move by (+1,+1) per frame") {
  const Dims d{200, 160, 24};
  const auto bars = diagonal_bar_shapes(d, 8, 32, 32, 4);
  REQUIRE(bars.size() == 8);
  HoleMask single(d);
  stamp(single, bars[0], d.frames);
  for (int t = 0; t + 1 < d.frames; ++t) {
    for (int y = 0; y + 1 < d.height; ++y)
      for (int x = 0; x + 1 < d.width; ++x) CHECK(single.at(x, y, t) == single.at(x + 1, y + 1, t + 1));
    // Whole 32x32 cross-section present in every frame.
    std::size_t in_frame = 0;
    for (int y = 0; y < d.height; ++y)
      for (int x = 0; x < d.width; ++x) in_frame += single.at(x, y, t) == SampleState::Unknown ? 1 : 0;
    CHECK(in_frame == 32 * 32);
  }

  const HoleMask all = gen_diagonal_bars(d, 8, 32, 32, 4);
  for (int t = 0; t < d.frames; ++t)
    for (const auto& bar : bars) CHECK(all.at(bar.x0 + t + 16, bar.y0 + t + 16, t) == SampleState::Unknown);
}

TEST_CASE("diagonal bars: empty and invalid requests") {
  const Dims d{64, 64, 8};
  CHECK(gen_diagonal_bars(d, 0, 32, 32, 1).hole_count() == 0);
  CHECK_THROWS_AS(gen_diagonal_bars(Dims{16, 64, 8}, 8, 32, 32, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_diagonal_bars(d, -1, 32, 32, 1), std::invalid_argument);
}

TEST_CASE("lens membership") {
  const Lens lens{50, 50, 10, 24.0, 4.0};
  CHECK(lens.contains(50, 50, 10));
  CHECK(lens.contains(74, 50, 10));
  CHECK_FALSE(lens.contains(75, 50, 10));
  CHECK(lens.contains(50, 50, 14));
  CHECK_FALSE(lens.contains(50, 50, 15));

  HoleMask m(Dims{120, 100, 24});
  stamp(m, lens);
  CHECK(m.at(50, 50, 10) == SampleState::Unknown);
  CHECK(m.at(75, 50, 10) == SampleState::Known);
}

TEST_CASE("lens masks are deterministic per seed and contained in their shapes") {
  const Dims d{128, 96, 16};
  const auto a = gen_lenses(d, 30, 24.0, 4.0, 7);
  const auto b = gen_lenses(d, 30, 24.0, 4.0, 7);
  const auto c = gen_lenses(d, 30, 24.0, 4.0, 8);
  CHECK(a == b);
  CHECK_FALSE(a == c);

  const auto lenses = lens_shapes(d, 30, 24.0, 4.0, 7);
  for (const auto& lens : lenses) CHECK(a.at(lens.cx, lens.cy, lens.ct) == SampleState::Unknown);
  for (int t = 0; t < d.frames; ++t)
    for (int y = 0; y < d.height; ++y)
      for (int x = 0; x < d.width; ++x) {
        if (a.at(x, y, t) != SampleState::Unknown) continue;
        bool inside = false;
        for (const auto& lens : lenses) inside = inside || lens.contains(x, y, t);
        CHECK(inside);
      }
}

TEST_CASE("linear bars") {
  HoleMask m(Dims{100, 100, 40});
  stamp(m, Box{20, 30, 5, 32, 32, 12});
  CHECK(m.hole_count() == 12288);
  CHECK(hole_ratio(m) == doctest::Approx(12288.0 / (100.0 * 100.0 * 40.0)));

  HoleMask clipped(Dims{100, 100, 40});
  stamp(clipped, Box{-10, 90, 35, 32, 32, 12});
  CHECK(clipped.hole_count() == 22u * 10u * 5u);

  const Dims d{128, 128, 16};
  const auto a = gen_linear_bars(d, 30, 32, 32, 12, 3);
  CHECK(a == gen_linear_bars(d, 30, 32, 32, 12, 3));
  const auto boxes = linear_bar_shapes(d, 30, 32, 32, 12, 3);
  for (int t = 0; t < d.frames; ++t)
    for (int y = 0; y < d.height; ++y)
      for (int x = 0; x < d.width; ++x) {
        if (a.at(x, y, t) != SampleState::Unknown) continue;
        bool inside = false;
        for (const auto& b : boxes)
          inside = inside || (x >= b.x0 && x < b.x0 + b.sx && y >= b.y0 && y < b.y0 + b.sy && t >= b.t0 &&
                              t < b.t0 + b.st);
        CHECK(inside);
      }
}

TEST_CASE("pattern names") {
  CHECK(parse_pattern_kind("lenses") == PatternKind::Lenses);
  CHECK(parse_pattern_kind("bars-linear") == PatternKind::LinearBars);
  CHECK(parse_pattern_kind("bars-diagonal") == PatternKind::DiagonalBars);
  CHECK_THROWS_AS(parse_pattern_kind("lifting"), std::invalid_argument);
  PatternSpec spec;
  spec.kind = PatternKind::LinearBars;
  spec.count = 2;
  spec.seed = 9;
  CHECK(generate(Dims{64, 64, 16}, spec) == gen_linear_bars(Dims{64, 64, 16}, 2, 32, 32, 12, 9));
}
