#include <doctest.h>

#include <upsub/io.hpp>
#include <upsub/support.hpp>

#include "test_util.hpp"

#include <cstdio>
#include <sstream>

using namespace upsub;

TEST_CASE("mask text format") {
  std::ostringstream os;
  write_mask(os, bspline_mask(1));
  CHECK(os.str() == "dim 1\n0 1 1\n1 1 0\n2 1 1\n");

  std::istringstream is(os.str());
  CHECK(read_mask(is) == bspline_mask(1));
}

TEST_CASE("mask round-trip covers extreme coefficients and negative indices") {
  Mask a(2);
  a.set({-3, 7}, Dyadic(BigInt("123456789012345678901234567890"), 100));
  a.set({0, 0}, -Dyadic(BigInt(1), 60));
  a.set({5, -2}, Dyadic(BigInt("-987654321098765432109876543210"), 3));

  std::stringstream ss;
  write_mask(ss, a);
  CHECK(read_mask(ss) == a);

  auto g = testutil::rng(53);
  for (int i = 0; i < 30; ++i) {
    const Mask m = testutil::random_mask(g, 1 + int(g() % 2));
    std::stringstream s2;
    write_mask(s2, m);
    CHECK(read_mask(s2) == m);
  }
}

TEST_CASE("mask files") {
  const std::string path = "/tmp/upsub_test_mask.txt";
  write_mask_file(path, box3_mask(1));
  CHECK(read_mask_file(path) == box3_mask(1));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_mask_file("/tmp/upsub_no_such_mask.txt"), std::runtime_error);
}

TEST_CASE("mask format errors") {
  auto fails = [](const char* text) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_mask(is), std::runtime_error);
  };
  fails("dmi 1\n");
  fails("dim 0\n");
  fails("dim 2\n0 0 1 0\n0 0 2 0\n");  // duplicate point
  fails("dim 2\n0\n");                 // truncated index
  fails("dim 1\n0 1\n");               // truncated coefficient
  fails("dim 1\n0 1 -2\n");            // negative exponent
  fails("dim 1\n0 abc 0\n");           // unparsable numerator
}

TEST_CASE("samples csv") {
  LatticeData f(1, Box{{0}, {2}});
  f.set({0}, 0.5);
  f.set({1}, 1.0);
  f.set({2}, 0.25);
  std::ostringstream os;
  write_samples_csv(os, f);
  CHECK(os.str() == "level,x_1,value\n1,0,0.5\n1,0.5,1\n1,1,0.25\n");

  LatticeData g(0, Box{{0, 0}, {1, 1}});
  g.set({0, 0}, 1.0);
  g.set({1, 1}, -2.0);
  std::ostringstream o2;
  write_samples_csv(o2, g);
  CHECK(o2.str() ==
        "level,x_1,x_2,value\n0,0,0,1\n0,0,1,0\n0,1,0,0\n0,1,1,-2\n");
}

TEST_CASE("polytope csv") {
  std::ostringstream os;
  write_polytope_csv(os, ConvexPolytope::interval(0, Rational(4, 3)));
  CHECK(os.str() == "lo,hi\n0,4/3\n");

  std::ostringstream o2;
  write_polytope_csv(o2, extended_support(box3_mask(0)));
  CHECK(o2.str() == "x_1,x_2\n0,0\n1,0\n2,1\n2,2\n1,2\n0,1\n");
}

TEST_CASE("pgm heightmaps") {
  LatticeData f(0, Box{{0, 0}, {1, 2}});
  f.set({0, 0}, 1.0);
  f.set({1, 2}, 0.5);
  f.set({1, 0}, -3.0); // clamps to black
  std::ostringstream os;
  write_pgm(os, f);
  CHECK(os.str() == "P2\n2 3\n65535\n65535 0\n0 0\n0 32768\n");

  // All-zero data stays valid.
  std::ostringstream o2;
  write_pgm(o2, LatticeData(0, Box{{0, 0}, {1, 1}}));
  CHECK(o2.str() == "P2\n2 2\n65535\n0 0\n0 0\n");

  CHECK_THROWS_AS(write_pgm(os, LatticeData(0, Box{{0}, {1}})), std::invalid_argument);
}
