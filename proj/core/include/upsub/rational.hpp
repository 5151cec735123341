#pragma once

#include "upsub/dyadic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace upsub {

/// General exact rationals. Dyadics cover every mask coefficient, but the
/// support geometry needs ratios like 4/3 or 32/31, so polytope vertices and
/// scale factors use this type instead.
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_rational(const Dyadic& d) {
  Rational r(d.numerator(), BigInt(1) << d.exponent());
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p" for integers, "p/q" otherwise (canonical, q > 0).
inline std::string rational_str(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

} // namespace upsub
