#include <doctest.h>

#include <upsub/runner.hpp>

#include <cmath>
#include <limits>

using namespace upsub;

TEST_CASE("univariate cascade from the delta") {
  const auto seq = MaskSequence::univariate_up(1);
  const auto run = cascade(seq, 2);
  REQUIRE(run.levels.size() == 3);
  CHECK(run.levels[0].window() == Box{{0}, {0}});

  // One step of the hat mask plants the hat itself.
  const LatticeData& f1 = run.levels[1];
  CHECK(f1.at({0}) == 1.0);
  CHECK(f1.at({1}) == 1.0);
  CHECK(f1.window() == Box{{0}, {1}});

  // Second step uses (1+z)^2/2: values 1/2,1,1,1,1/2 on 0..4.
  const LatticeData& f2 = run.deepest();
  CHECK(f2.level() == 2);
  CHECK(f2.window() == Box{{0}, {4}});
  CHECK(f2.at({0}) == 0.5);
  CHECK(f2.at({1}) == 1.0);
  CHECK(f2.at({2}) == 1.0);
  CHECK(f2.at({3}) == 1.0);
  CHECK(f2.at({4}) == 0.5);
}

TEST_CASE("cascade mass and positivity invariants") {
  const auto seq = MaskSequence::bivariate_up(2);
  const auto run = cascade(seq, 3);
  double mass = 1.0;
  for (std::size_t k = 0; k < run.levels.size(); ++k) {
    double total = 0.0;
    for (double v : run.levels[k].values()) {
      CHECK(v >= 0.0);
      total += v;
    }
    CHECK(total == doctest::Approx(mass).epsilon(1e-12));
    mass *= 4.0; // sum of every mask in the family
  }
}

TEST_CASE("stationary hat scheme reproduces the hat function") {
  const auto run = stationary_blf(bspline_mask(1), 6);
  const LatticeData& f = run.deepest();
  CHECK(f.level() == 6);
  // The level-k data is the discrete triangle f(a) = hat((a+1)/2^k) with the
  // hat peaking at x = 1 on [0,2]; all values are exact dyadics.
  CHECK(f.window() == Box{{0}, {126}});
  CHECK(f.at({63}) == 1.0);
  CHECK(f.at({31}) == 0.5);
  CHECK(f.at({95}) == 0.5);
  CHECK(f.at({0}) == 1.0 / 64);
  CHECK(f.at({126}) == 1.0 / 64);
}

TEST_CASE("box spline blf support") {
  const auto run = stationary_blf(box3_mask(0), 4);
  const LatticeData& f = run.deepest();
  // The limit's support is the hexagonal hull of {0..2}^2 without the corners
  // (2,0) and (0,2); along the axes the data vanishes past x = 1.
  CHECK(f.at({30, 0}) == 0.0);
  CHECK(f.at({0, 30}) == 0.0);
  CHECK(f.at({1 << 4, 1 << 4}) > 0.0);
}

TEST_CASE("frozen limit input validation") {
  const auto seq = MaskSequence::univariate_up(1);
  CHECK_THROWS_AS(frozen_limit(seq, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(frozen_limit(seq, -1, 3), std::invalid_argument);
  const auto s = frozen_limit(seq, 2, 3);
  CHECK(s.k == 2);
  CHECK(s.inner == 3);
  CHECK(s.samples.level() == 5);
}

TEST_CASE("ladder gaps") {
  const auto seq = MaskSequence::univariate_up(1);
  CHECK(ladder_gap(seq, 2, 0, 8) == 0.0);
  CHECK_THROWS_AS(ladder_gap(seq, 2, 1, 3), std::invalid_argument);

  // A stationary sequence has identical ladder members at every index.
  const auto stat = MaskSequence::explicit_list({bspline_mask(1)});
  CHECK(ladder_gap(stat, 1, 2, 8) == 0.0);

  // For the genuinely non-stationary family the gap is positive and shrinks.
  const double g1 = ladder_gap(seq, 1, 1, 10);
  const double g3 = ladder_gap(seq, 3, 1, 10);
  CHECK(g1 > 0.0);
  CHECK(g3 > 0.0);
  CHECK(g3 < g1);
}

TEST_CASE("smoothness probe") {
  // Zero data stays zero; the 0/0 ratio convention reports 0.
  const auto stat = MaskSequence::explicit_list({bspline_mask(1)});
  const auto run = cascade(stat, 4, LatticeData(0, Box{{0}, {6}}));
  for (double r : smoothness_probe(run, 1, Direction({1})))
    CHECK(r == 0.0);

  // Hat scheme, second differences: sup|grad^2 f^[l]| = 2^{1-l} at the peak,
  // so g_l = 2^l * 2^{1-l} = 2 at every level and the ratio is exactly 1.
  // The hat is not C^1 and the probe correctly refuses to drop below 1.
  const auto hat = stationary_blf(bspline_mask(1), 6);
  const auto ratios = smoothness_probe(hat, 2, Direction({1}));
  REQUIRE(ratios.size() == 6);
  CHECK(ratios.back() == doctest::Approx(1.0).epsilon(1e-12));

  // First differences of the hat halve per level and order 1 carries no
  // 2^l weight, so the ratio settles at exactly 1/2: C^0 behavior.
  const auto r1 = smoothness_probe(hat, 1, Direction({1}));
  CHECK(r1.back() == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(smoothness_probe(hat, 0, Direction({1})), std::invalid_argument);
}

TEST_CASE("cascade with explicit initial data is a linear operator run") {
  const auto seq = MaskSequence::univariate_up(1);
  LatticeData init(0, Box{{0}, {1}});
  init.set({0}, 1.0);
  init.set({1}, 2.0);
  const auto run = cascade(seq, 1, init);
  const LatticeData& f = run.deepest();
  // S_a with a = (1,1): f(2b)=f(2b+1)=sum over b.
  CHECK(f.at({0}) == 1.0);
  CHECK(f.at({1}) == 1.0);
  CHECK(f.at({2}) == 2.0);
  CHECK(f.at({3}) == 2.0);
}
