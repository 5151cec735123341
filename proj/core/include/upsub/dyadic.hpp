#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

namespace upsub {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational p / 2^q with q >= 0.
///
/// Values are kept fully reduced: the numerator is odd unless the exponent is
/// already zero, and zero is stored as (0, 0). The ring is closed under
/// addition, multiplication and exact halving, which is all the scheme
/// coefficients ever need; there is no rounding anywhere.
///
/// Numerators are arbitrary precision. Exponents are capped (default 4096) so
/// a runaway refinement fails loudly instead of exhausting memory.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(long long n) : num_(n) {}
  Dyadic(BigInt numerator, int exponent);

  const BigInt& numerator() const { return num_; }
  int exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Dyadic operator-() const;
  Dyadic abs() const;

  /// Exact multiplication by 2^k; k may be negative (exact halving).
  Dyadic times_pow2(int k) const;
  Dyadic halved() const { return times_pow2(-1); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// a / b when the quotient is again dyadic (the odd part of b's numerator
  /// divides a's numerator), nullopt otherwise. b must be nonzero.
  static std::optional<Dyadic> divide_exact(const Dyadic& a, const Dyadic& b);

  double to_double() const;

  /// "p" for integers, "p/2^q" otherwise.
  std::string str() const;

  /// Process-wide exponent limit. Exceeding it throws std::domain_error.
  static int exponent_cap();
  static void set_exponent_cap(int cap);

private:
  void reduce();

  BigInt num_ = 0;
  int exp_ = 0;
};

} // namespace upsub
