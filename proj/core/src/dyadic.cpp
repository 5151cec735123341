#include "upsub/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace upsub {

namespace {
int g_exponent_cap = 4096;
} // namespace

int Dyadic::exponent_cap() { return g_exponent_cap; }

void Dyadic::set_exponent_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("exponent cap must be nonnegative");
  g_exponent_cap = cap;
}

Dyadic::Dyadic(BigInt numerator, int exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (exponent < 0) throw std::invalid_argument("dyadic exponent must be nonnegative");
  reduce();
}

void Dyadic::reduce() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ > 0 && !boost::multiprecision::bit_test(num_ < 0 ? BigInt(-num_) : num_, 0)) {
    const unsigned tz = boost::multiprecision::lsb(num_ < 0 ? BigInt(-num_) : num_);
    const int shift = static_cast<int>(tz) < exp_ ? static_cast<int>(tz) : exp_;
    num_ >>= shift;
    exp_ -= shift;
  }
  if (exp_ > g_exponent_cap)
    throw std::domain_error("dyadic exponent cap exceeded (" + std::to_string(exp_) +
                            " > " + std::to_string(g_exponent_cap) + ")");
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  if (r.num_ < 0) r.num_ = -r.num_;
  return r;
}

Dyadic Dyadic::times_pow2(int k) const {
  Dyadic r = *this;
  if (r.num_ == 0) return r;
  if (k >= 0) {
    if (r.exp_ >= k) {
      r.exp_ -= k;
    } else {
      r.num_ <<= (k - r.exp_);
      r.exp_ = 0;
    }
  } else {
    r.exp_ += -k;
    r.reduce();
  }
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  Dyadic r;
  const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  r.num_ = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
  r.exp_ = e;
  r.reduce();
  return r;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  Dyadic r;
  r.num_ = a.num_ * b.num_;
  r.exp_ = a.exp_ + b.exp_;
  r.reduce();
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  const BigInt lhs = a.num_ << (e - a.exp_);
  const BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Dyadic> Dyadic::divide_exact(const Dyadic& a, const Dyadic& b) {
  if (b.num_ == 0) throw std::invalid_argument("division by zero");
  if (a.num_ == 0) return Dyadic(0);
  // Split b.num into odd * 2^t; only the odd part has to divide a's numerator.
  int t = 0;
  BigInt bodd = b.num_;
  if (!boost::multiprecision::bit_test(bodd < 0 ? BigInt(-bodd) : bodd, 0)) {
    t = static_cast<int>(boost::multiprecision::lsb(bodd < 0 ? BigInt(-bodd) : bodd));
    bodd >>= t;
  }
  BigInt q, rem;
  boost::multiprecision::divide_qr(a.num_, bodd, q, rem);
  if (rem != 0) return std::nullopt;
  // a/b = (a.num/bodd) * 2^(b.exp - t - a.exp)
  return Dyadic(std::move(q), 0).times_pow2(b.exp_ - t - a.exp_);
}

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), -exp_);
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

} // namespace upsub
