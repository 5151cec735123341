#include <doctest.h>

#include <upsub/classify.hpp>

using namespace upsub;

namespace {

const BasisSequence uni = BasisSequence::constant(Basis({Direction({1})}));
const BasisSequence canon2 = BasisSequence::constant(Basis::canonical(2));

Mask box_residual(int m) {
  // 4 * s_{(1,1)}^{m+1}: what extraction leaves of the box spline mask.
  DirectionMultiset d;
  for (int i = 0; i <= m; ++i)
    d.add(Direction({1, 1}));
  return directional_product(d, 2).scaled(Dyadic(4));
}

} // namespace

TEST_CASE("basis sequences repeat their last entry") {
  const Basis skew({Direction({1, 0}), Direction({1, 1})});
  const auto seq = BasisSequence::list({Basis::canonical(2), skew});
  CHECK(seq.at(1) == Basis::canonical(2));
  CHECK(seq.at(2) == skew);
  CHECK(seq.at(7) == skew);
  CHECK_THROWS_AS(seq.at(0), std::invalid_argument);
  CHECK_THROWS_AS(BasisSequence::list({}), std::invalid_argument);
}

TEST_CASE("full factor extraction on bspline masks") {
  for (int m = 0; m <= 6; ++m) {
    const auto res = extract_full_factors(bspline_mask(m), uni, 64);
    CHECK(res.count == m);
    CHECK(res.residual == bspline_mask(0));
  }
  const auto capped = extract_full_factors(bspline_mask(5), uni, 2);
  CHECK(capped.count == 2);
  CHECK(capped.residual == bspline_mask(3));

  const auto none = extract_full_factors(bspline_mask(4), uni, 0);
  CHECK(none.count == 0);
  CHECK(none.residual == bspline_mask(4));
}

TEST_CASE("full factor extraction on box spline masks") {
  for (int m = 0; m <= 3; ++m) {
    const auto res = extract_full_factors(box3_mask(m), canon2, 64);
    CHECK(res.count == m + 1);
    CHECK(res.residual == box_residual(m));
  }
}

TEST_CASE("classification of bspline masks") {
  for (int m = 0; m <= 5; ++m) {
    const auto rep = classify(bspline_mask(m), uni);
    CHECK(rep.j == m);
    CHECK(rep.base == bspline_mask(0));
    CHECK(rep.extra.empty());
    CHECK(rep.flags.positive);
    CHECK(rep.flags.sum_rule);
    CHECK(rep.flags.convergence == BaseConvergence::kHeuristic);
    REQUIRE(rep.factorization.has_value());
    CHECK(rep.factorization->reconstruct() == bspline_mask(m));
  }
}

TEST_CASE("classification of box spline masks") {
  for (int m = 0; m <= 3; ++m) {
    const auto rep = classify(box3_mask(m), canon2);
    CHECK(rep.j == m + 1);

    Mask base(2);
    base.set({0, 0}, Dyadic(2));
    base.set({1, 1}, Dyadic(2));
    CHECK(rep.base == base);
    CHECK(int(rep.extra.size()) == m);
    CHECK(rep.flags.positive);
    CHECK(!rep.flags.sum_rule);
    CHECK(rep.flags.convergence == BaseConvergence::kHeuristic);
    REQUIRE(rep.factorization.has_value());
    CHECK(rep.factorization->reconstruct() == box3_mask(m));
  }
}

TEST_CASE("classification degrades gracefully") {
  Mask bad(1);
  bad.set({0}, Dyadic(1));
  bad.set({1}, -Dyadic(BigInt(1), 1));
  const auto rep = classify(bad, uni);
  CHECK(rep.j == 0);
  CHECK(rep.base == bad);
  CHECK(!rep.flags.positive);
  CHECK(rep.flags.convergence == BaseConvergence::kFailed);
  CHECK(!rep.factorization.has_value());

  CHECK_THROWS_AS(classify(Mask(1), uni), std::invalid_argument);
}

TEST_CASE("certified base on a non smoothing-product symbol") {
  // 1/2 + z/4 + z^2/4 is positive but not a constant times smoothing factors,
  // and its probe scheme contracts, which is the certified combination.
  Mask base(1);
  base.set({0}, Dyadic(BigInt(1), 1));
  base.set({1}, Dyadic(BigInt(1), 2));
  base.set({2}, Dyadic(BigInt(1), 2));
  REQUIRE(!smoothing_product_decomposition(base).has_value());
  const auto rep = classify(product(base, smoothing_factor(Direction({1}), 1)), uni);
  CHECK(rep.j == 1);
  CHECK(rep.base == base);
  CHECK(rep.flags.convergence == BaseConvergence::kCertified);
}

TEST_CASE("law of factor counts for the univariate family") {
  for (int r = 1; r <= 3; ++r) {
    const auto seq = MaskSequence::univariate_up(r);
    for (int k = 0; k < 20; ++k)
      CHECK(classify(seq.mask(k), uni).j == k / r);
  }
}

TEST_CASE("sequence report for the univariate family") {
  const auto rep = sequence_smoothness_report(MaskSequence::univariate_up(1), uni, 8);
  CHECK(rep.j == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(rep.monotone);
  CHECK(rep.j_star == 4);
  CHECK(rep.window_start == 4);
  CHECK(rep.weakest == BaseConvergence::kHeuristic);
  CHECK(rep.law_period == 1);
  CHECK(rep.c_infinity);
}

TEST_CASE("sequence report for the bivariate family") {
  const auto rep = sequence_smoothness_report(MaskSequence::bivariate_up(2), canon2, 6);
  CHECK(rep.j == std::vector<int>{1, 1, 2, 2, 3, 3});
  CHECK(rep.monotone);
  CHECK(rep.j_star == 2);
  CHECK(rep.window_start == 2);
  CHECK(rep.law_period == 2);
  CHECK(rep.c_infinity);
}

TEST_CASE("sequence report for explicit lists") {
  const auto constant =
      sequence_smoothness_report(MaskSequence::explicit_list({bspline_mask(3)}), uni, 5);
  CHECK(constant.j == std::vector<int>{3, 3, 3, 3, 3});
  CHECK(constant.j_star == 3);
  CHECK(constant.window_start == 0);
  CHECK(!constant.law_period.has_value());
  CHECK(!constant.c_infinity);

  // One rough leading mask is skipped by the window search.
  const auto rough = sequence_smoothness_report(
      MaskSequence::explicit_list({bspline_mask(0), bspline_mask(2)}), uni, 5);
  CHECK(rough.j == std::vector<int>{0, 2, 2, 2, 2});
  CHECK(rough.monotone);
  CHECK(rough.j_star == 2);
  CHECK(rough.window_start == 1);
}

TEST_CASE("sequence report for the powers family") {
  const auto good =
      sequence_smoothness_report(MaskSequence::powers(box3_mask(0), 3), canon2, 7);
  CHECK(good.j == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  CHECK(good.law_period == 3);
  CHECK(good.c_infinity);

  // A base whose constant is not 2^d fails the law premise: no C-infinity
  // claim even though each mask still factors.
  Mask loud(1);
  loud.set({0}, Dyadic(1));
  loud.set({1}, Dyadic(2));
  loud.set({2}, Dyadic(1));
  const auto shaky = sequence_smoothness_report(MaskSequence::powers(loud, 2), uni, 4);
  CHECK(!shaky.law_period.has_value());
  CHECK(!shaky.c_infinity);
}
