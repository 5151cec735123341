#include <doctest.h>

#include <upsub/runner.hpp>
#include <upsub/support.hpp>

using namespace upsub;

namespace {

RatPoint pt(const Rational& a, const Rational& b) { return RatPoint{{a, b}}; }

ConvexPolytope hexagon(const Rational& s) {
  std::vector<RatPoint> v = {pt(0, 0), pt(s, 0),     pt(2 * s, s), pt(2 * s, 2 * s),
                             pt(s, 2 * s), pt(0, s)};
  return ConvexPolytope::from_points(2, std::move(v));
}

} // namespace

TEST_CASE("extended supports of the preset masks") {
  for (int m = 0; m <= 5; ++m)
    CHECK(extended_support(bspline_mask(m)) ==
          ConvexPolytope::interval(0, Rational(m + 1)));
  for (int m = 0; m <= 3; ++m)
    CHECK(extended_support(box3_mask(m)) == hexagon(Rational(m + 1)));
  CHECK_THROWS_AS(extended_support(Mask(1)), std::invalid_argument);
}

TEST_CASE("preset support predictions match the closed form") {
  for (int r = 1; r <= 8; ++r) {
    const auto u = predicted_support(MaskSequence::univariate_up(r));
    CHECK(u.exact);
    CHECK(u.region == closed_form_support(Family::kUnivariateUp, r));

    const auto b = predicted_support(MaskSequence::bivariate_up(r));
    CHECK(b.exact);
    CHECK(b.region == closed_form_support(Family::kBivariateUp, r));
  }

  CHECK(predicted_support(MaskSequence::univariate_up(1)).region ==
        ConvexPolytope::interval(0, 2));
  CHECK(predicted_support(MaskSequence::univariate_up(2)).region ==
        ConvexPolytope::interval(0, Rational(4, 3)));
  CHECK(predicted_support(MaskSequence::bivariate_up(1)).region == hexagon(2));
  CHECK(predicted_support(MaskSequence::bivariate_up(2)).region == hexagon(Rational(4, 3)));
  CHECK(MaskSequence::univariate_up(5).support_scale() == Rational(32, 31));

  // The powers preset built on the box spline has the same prediction.
  const auto p = predicted_support(MaskSequence::powers(box3_mask(0), 3));
  CHECK(p.region == hexagon(Rational(8, 7)));

  CHECK_THROWS_AS(closed_form_support(Family::kPowers, 2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_support(Family::kUnivariateUp, 0), std::invalid_argument);
}

TEST_CASE("explicit sequences sum their repeat-last tail exactly") {
  const auto seq =
      MaskSequence::explicit_list({bspline_mask(0), bspline_mask(1), bspline_mask(2)});
  const auto s = predicted_support(seq);
  CHECK(s.exact);
  // lambda = 1, 2, 3; sum = 1/2 + 2/4 + 3 * 2^{-2} = 7/4.
  CHECK(s.region == ConvexPolytope::interval(0, Rational(7, 4)));

  // A declared scale law is verified against the measured one.
  const auto declared =
      MaskSequence::explicit_list({bspline_mask(0), bspline_mask(1)}, {1, 2});
  CHECK(predicted_support(declared).region == ConvexPolytope::interval(0, Rational(3, 2)));
  const auto wrong =
      MaskSequence::explicit_list({bspline_mask(0), bspline_mask(1)}, {1, 3});
  CHECK_THROWS_AS(predicted_support(wrong), AssumptionViolation);
}

TEST_CASE("affine tail bounds give outer estimates") {
  const auto seq =
      MaskSequence::explicit_list({bspline_mask(0), bspline_mask(1), bspline_mask(2)});

  // lambda_k = k + 1 is dominated by 1 + k; the over-bounded sum is exactly 2,
  // the true support of the fully non-stationary family.
  const auto out = predicted_support(seq, 2, AffineTailBound{1, 1});
  CHECK(!out.exact);
  CHECK(out.region == ConvexPolytope::interval(0, 2));

  CHECK_THROWS_AS(predicted_support(seq, 2, AffineTailBound{1, 0}), AssumptionViolation);
}

TEST_CASE("growth law violations are reported") {
  // Shrinking support.
  const auto shrink = MaskSequence::explicit_list({bspline_mask(1), bspline_mask(0)});
  CHECK_THROWS_AS(predicted_support(shrink), AssumptionViolation);

  // Support that is no scaled copy of the first mask's.
  Mask square(2);
  square.set({0, 0}, Dyadic(1));
  square.set({1, 0}, Dyadic(1));
  square.set({0, 1}, Dyadic(1));
  square.set({1, 1}, Dyadic(1));
  const auto mixed = MaskSequence::explicit_list({box3_mask(0), square});
  CHECK_THROWS_AS(predicted_support(mixed), AssumptionViolation);
}

TEST_CASE("empirical support of cascade data") {
  const auto hat = stationary_blf(bspline_mask(1), 6);
  const auto emp = empirical_support(hat.deepest());
  CHECK(emp == ConvexPolytope::interval(0, Rational(126, 64)));
  // Inside the limit support [0,2], short of it by exactly two cells.
  CHECK(directed_hausdorff_sq(emp, ConvexPolytope::interval(0, 2)) == Rational(0));
  CHECK(hausdorff_sq(emp, ConvexPolytope::interval(0, 2)) == Rational(1, 1024));

  const auto box = stationary_blf(box3_mask(0), 3);
  const auto emp2 = empirical_support(box.deepest());
  CHECK(directed_hausdorff_sq(emp2, hexagon(1)) == Rational(0));

  CHECK_THROWS_AS(empirical_support(hat.deepest(), -0.5), std::invalid_argument);
  CHECK_THROWS_AS(empirical_support(hat.deepest(), 2.0), std::runtime_error);
  CHECK_THROWS_AS(empirical_support(LatticeData(0, Box{{0}, {3}})), std::runtime_error);
}
