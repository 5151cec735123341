#include <doctest.h>

#include <upsub/subdivision.hpp>

#include "test_util.hpp"

#include <cmath>

using namespace upsub;

namespace {

const Dyadic half(BigInt(1), 1);
const Dyadic quarter(BigInt(1), 2);

LatticeData mask_as_data(const Mask& a, int level) {
  LatticeData f(level, Box{a.min_corner(), a.max_corner()});
  for (const auto& [alpha, w] : a.coefficients())
    f.set(alpha, w.to_double());
  return f;
}

} // namespace

TEST_CASE("one subdivision step on the delta") {
  const LatticeData d = LatticeData::delta(1);
  const LatticeData out = apply_subdivision(bspline_mask(1), d);
  CHECK(out.level() == 1);
  CHECK(out.window() == Box{{0}, {2}});
  CHECK(out.at({0}) == 0.5);
  CHECK(out.at({1}) == 1.0);
  CHECK(out.at({2}) == 0.5);

  const LatticeData two = apply_subdivision(bspline_mask(1), out);
  CHECK(two.level() == 2);
  CHECK(two.window() == Box{{0}, {6}});
  CHECK(two.at({3}) == 1.0);
  CHECK(two.at({1}) == 0.5);
}

TEST_CASE("subdivision window recursion") {
  // window(S_a f) = 2 window(f) + box(a)
  LatticeData f(3, Box{{-1, 2}, {4, 5}});
  f.set({0, 3}, 1.0);
  const LatticeData out = apply_subdivision(box3_mask(0), f);
  CHECK(out.window() == Box{{-2, 4}, {10, 12}});
  CHECK(out.level() == 4);
}

TEST_CASE("exact and floating subdivision agree on dyadic data") {
  auto g = testutil::rng(23);
  for (int dim = 1; dim <= 2; ++dim) {
    for (int i = 0; i < 25; ++i) {
      const Mask a = testutil::random_mask(g, dim);
      const Mask f = testutil::random_mask(g, dim);
      if (f.empty() || a.empty()) continue;
      const Mask exact = subdivide_exact(a, f);
      const LatticeData num = apply_subdivision(a, mask_as_data(f, 0));
      for (std::int64_t n = 0; n < num.window().num_points(); ++n) {
        const IndexVector idx = num.window().index_at(n);
        CHECK(num.at(idx) == doctest::Approx(exact.at(idx).to_double()).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("subdivision is linear and preserves total mass times 2^d") {
  auto g = testutil::rng(29);
  for (int i = 0; i < 20; ++i) {
    const Mask a = testutil::random_mask(g, 2);
    const Mask f = testutil::random_mask(g, 2);
    const Mask h = testutil::random_mask(g, 2);
    CHECK(subdivide_exact(a, add(f, h)) ==
          add(subdivide_exact(a, f), subdivide_exact(a, h)));
    CHECK(subdivide_exact(a, f).sum() == a.sum() * f.sum());
  }
}

TEST_CASE("threaded gather matches sequential scatter bitwise") {
  auto g = testutil::rng(31);
  for (int dim = 1; dim <= 2; ++dim) {
    for (int i = 0; i < 10; ++i) {
      const Mask a = testutil::random_mask(g, dim, 4, 0.8);
      LatticeData f(2, dim == 1 ? Box{{-3}, {9}} : Box{{-3, -1}, {6, 7}});
      for (auto& v : f.values())
        v = std::ldexp(double(int(g() % 2048)) - 1024.0, -7);
      SubdivisionOptions seq, par;
      seq.threads = 1;
      par.threads = 3;
      const LatticeData x = apply_subdivision(a, f, seq);
      const LatticeData y = apply_subdivision(a, f, par);
      REQUIRE(x.window() == y.window());
      CHECK(x.values() == y.values());
    }
  }
}

TEST_CASE("window cap trips") {
  SubdivisionOptions opts;
  opts.window_cap = 16;
  LatticeData f(0, Box{{0, 0}, {3, 3}});
  CHECK_THROWS_AS(apply_subdivision(box3_mask(0), f, opts), WindowCapExceeded);
}

TEST_CASE("operator norm pinned values") {
  CHECK(operator_norm(bspline_mask(0)) == Dyadic(1));
  CHECK(operator_norm(bspline_mask(1)) == Dyadic(1));
  CHECK(operator_norm(box3_mask(0)) == Dyadic(1));
  Mask b(1);
  b.set({0}, quarter);
  b.set({1}, half);
  b.set({2}, quarter);
  CHECK(operator_norm(b) == half);

  Mask c(1);
  c.set({0}, quarter);
  c.set({1}, quarter);
  CHECK(operator_norm(c) == quarter);

  Mask m(1);
  m.set({0}, half);
  m.set({1}, Dyadic(1));
  m.set({2}, -half);
  CHECK(operator_norm(m) == Dyadic(1));
}

TEST_CASE("iterated norms") {
  Mask b(1);
  b.set({0}, quarter);
  b.set({1}, half);
  b.set({2}, quarter);
  CHECK(iterated_norm(b, 1) == operator_norm(b));
  CHECK(iterated_norm(b, 2) == quarter);

  auto g = testutil::rng(37);
  for (int i = 0; i < 40; ++i) {
    const Mask a = testutil::random_mask(g, 1 + int(g() % 2));
    if (a.empty()) continue;
    CHECK(iterated_norm(a, 1) == operator_norm(a));
  }
  // Nonnegative sum-rule masks have norm exactly one at every power.
  for (int m = 0; m <= 3; ++m) {
    CHECK(iterated_norm(bspline_mask(m), 3) == Dyadic(1));
    CHECK(iterated_norm(box3_mask(m), 2) == Dyadic(1));
  }
}

TEST_CASE("factored symbols reconstruct") {
  const FactoredSymbol c(bspline_mask(0), DirectionMultiset(),
                         {Basis({Direction({1})})});
  CHECK(c.reconstruct() == bspline_mask(1));

  Mask base(2);
  base.set({0, 0}, Dyadic(2));
  base.set({1, 1}, Dyadic(2));
  const FactoredSymbol cb(base, DirectionMultiset(), {Basis::canonical(2)});
  CHECK(cb.reconstruct() == box3_mask(0));

  CHECK_THROWS_AS(FactoredSymbol(backward_difference(bspline_mask(1), Direction({1})),
                                 DirectionMultiset(), {}),
                  std::invalid_argument);
}

TEST_CASE("difference scheme of the cubic-type bspline symbol") {
  // (1+z)^3/4 with base (1+z), one full factor, D empty.
  const FactoredSymbol c(bspline_mask(0), DirectionMultiset(),
                         {Basis({Direction({1})}), Basis({Direction({1})})});
  CHECK(c.reconstruct() == bspline_mask(2));
  const DiagonalDifferenceScheme s = difference_scheme(c);
  REQUIRE(s.diagonal.size() == 1);
  Mask expect(1);
  expect.set({0}, quarter);
  expect.set({1}, half);
  expect.set({2}, quarter);
  CHECK(s.diagonal[0] == expect);
  CHECK(operator_norm(s.diagonal[0]) == half);

  const auto dd = divided_difference_symbols(c);
  REQUIRE(dd.size() == 1);
  CHECK(dd[0] == expect.scaled(Dyadic(2)));
  CHECK(satisfies_sum_rule(dd[0]));
}

TEST_CASE("difference scheme of the box spline symbol") {
  Mask base(2);
  base.set({0, 0}, Dyadic(2));
  base.set({1, 1}, Dyadic(2));
  const FactoredSymbol c(base, DirectionMultiset(), {Basis::canonical(2)});
  const DiagonalDifferenceScheme s = difference_scheme(c);
  REQUIRE(s.diagonal.size() == 2);

  // b_11 = (1 + z1 z2)(1 + z2)/2, four coefficients of 1/2.
  Mask b11(2);
  b11.set({0, 0}, half);
  b11.set({0, 1}, half);
  b11.set({1, 1}, half);
  b11.set({1, 2}, half);
  CHECK(s.diagonal[0] == b11);
  CHECK(operator_norm(s.diagonal[0]) == half);
  CHECK(operator_norm(s.diagonal[1]) == half);
  for (const auto& b : s.diagonal)
    CHECK(divide_exact(b, base.scaled(quarter)).has_value());
}

TEST_CASE("difference scheme needs a full factor") {
  const FactoredSymbol bare(bspline_mask(0), DirectionMultiset(), {});
  CHECK_THROWS_AS(difference_scheme(bare), std::invalid_argument);
  CHECK_THROWS_AS(divided_difference_symbols(bare), std::invalid_argument);
}

TEST_CASE("contractivity of pinned schemes") {
  const FactoredSymbol hat(bspline_mask(0), DirectionMultiset(),
                           {Basis({Direction({1})})});
  const auto r = contractivity(hat);
  REQUIRE(r.has_value());
  CHECK(r->L == 1);
  CHECK(r->rho == half);

  Mask base(2);
  base.set({0, 0}, Dyadic(2));
  base.set({1, 1}, Dyadic(2));
  const auto rb = contractivity(FactoredSymbol(base, DirectionMultiset(),
                                               {Basis::canonical(2)}));
  REQUIRE(rb.has_value());
  CHECK(rb->L == 1);
  CHECK(rb->rho == half);
  CHECK(rb->per_direction == std::vector<Dyadic>{half, half});

  // base 2*delta gives b_11 = delta, whose norm is one at every power, so no
  // tested power contracts.
  Mask twodelta(1);
  twodelta.set({0}, Dyadic(2));
  const FactoredSymbol lazy(twodelta, DirectionMultiset(), {Basis({Direction({1})})});
  CHECK(!contractivity(lazy, 3).has_value());
}

TEST_CASE("differencing commutes with subdivision") {
  auto g = testutil::rng(41);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const int dim = 1 + int(g() % 2);
    Mask base = testutil::random_mask(g, dim, 2, 0.7, true);
    if (base.empty() || !(base.at(IndexVector(dim, 0)).sign() > 0)) base = Mask::delta(dim);
    DirectionMultiset extra;
    if (g() % 2) extra.add(dim == 1 ? Direction({1}) : Direction({1, 1}));
    std::vector<Basis> fulls;
    const int nf = 1 + int(g() % 2);
    for (int k = 0; k < nf; ++k)
      fulls.push_back(dim == 1 ? Basis({Direction({1})}) : Basis::canonical(dim));
    const FactoredSymbol c(base, extra, fulls);
    const Mask data = testutil::random_mask(g, dim);
    CHECK(commutation_holds(c, data));
    ++checked;
  }
  CHECK(checked == 60);
}
