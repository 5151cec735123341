#include "upsub/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace upsub {

namespace {

void check_period(int r) {
  if (r < 1)
    throw std::invalid_argument("MaskSequence: period r must be >= 1");
}

Mask power_of(const Mask& a, int n) {
  Mask p = Mask::delta(a.dim());
  for (int i = 0; i < n; ++i)
    p = product(p, a);
  return p;
}

/// Pick d linearly independent directions out of D0, earliest-first so the
/// choice is deterministic. Returns the basis and the leftover multiset.
std::optional<std::pair<Basis, DirectionMultiset>>
split_basis(const DirectionMultiset& D0, int dim) {
  const auto& dirs = D0.directions();
  if (dim == 1) {
    if (dirs.empty())
      return std::nullopt;
    DirectionMultiset rest;
    for (std::size_t i = 1; i < dirs.size(); ++i)
      rest.add(dirs[i]);
    return std::make_pair(Basis({dirs[0]}), rest);
  }
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const auto& u = dirs[i].vec();
      const auto& v = dirs[j].vec();
      if (std::int64_t(u[0]) * v[1] - std::int64_t(u[1]) * v[0] == 0)
        continue;
      DirectionMultiset rest;
      for (std::size_t t = 0; t < dirs.size(); ++t)
        if (t != i && t != j)
          rest.add(dirs[t]);
      return std::make_pair(Basis({dirs[i], dirs[j]}), rest);
    }
  }
  return std::nullopt;
}

} // namespace

MaskSequence MaskSequence::univariate_up(int r) {
  check_period(r);
  MaskSequence s;
  s.family_ = Family::kUnivariateUp;
  s.dim_ = 1;
  s.r_ = r;
  return s;
}

MaskSequence MaskSequence::bivariate_up(int r) {
  check_period(r);
  MaskSequence s;
  s.family_ = Family::kBivariateUp;
  s.dim_ = 2;
  s.r_ = r;
  return s;
}

MaskSequence MaskSequence::powers(Mask a, int r) {
  check_period(r);
  if (a.empty())
    throw std::invalid_argument("MaskSequence::powers: empty mask");
  if (a.dim() > 2)
    throw std::invalid_argument("MaskSequence::powers: dimension above 2 unsupported");
  MaskSequence s;
  s.family_ = Family::kPowers;
  s.dim_ = a.dim();
  s.r_ = r;
  s.powers_base_ = std::move(a);
  return s;
}

MaskSequence MaskSequence::explicit_list(std::vector<Mask> masks,
                                         std::vector<Rational> lambda_law) {
  if (masks.empty())
    throw std::invalid_argument("MaskSequence: explicit list needs at least one mask");
  const int d = masks.front().dim();
  for (const auto& m : masks) {
    if (m.dim() != d)
      throw std::invalid_argument("MaskSequence: masks of mixed dimension");
    if (m.empty())
      throw std::invalid_argument("MaskSequence: zero mask in explicit list");
  }
  if (!lambda_law.empty() && lambda_law.size() != masks.size())
    throw std::invalid_argument("MaskSequence: lambda law length differs from mask count");
  MaskSequence s;
  s.family_ = Family::kExplicit;
  s.dim_ = d;
  s.masks_ = std::move(masks);
  s.lambda_law_ = std::move(lambda_law);
  return s;
}

Mask MaskSequence::mask(int k) const {
  if (k < 0)
    throw std::invalid_argument("MaskSequence::mask: negative level");
  switch (family_) {
  case Family::kUnivariateUp:
    return bspline_mask(k / r_);
  case Family::kBivariateUp:
    return box3_mask(k / r_);
  case Family::kPowers: {
    const int m = k / r_;
    return power_of(powers_base_, m + 1).scaled(Dyadic(BigInt(1), dim_ * m));
  }
  case Family::kExplicit: {
    const std::size_t i = std::min<std::size_t>(std::size_t(k), masks_.size() - 1);
    return masks_[i];
  }
  }
  throw std::logic_error("MaskSequence::mask: bad family");
}

std::optional<int> MaskSequence::law_exponent(int k) const {
  if (k < 0)
    throw std::invalid_argument("MaskSequence::law_exponent: negative level");
  if (family_ == Family::kExplicit)
    return std::nullopt;
  return k / r_;
}

std::optional<FactoredSymbol> MaskSequence::canonical_factorization(int k) const {
  if (k < 0)
    throw std::invalid_argument("MaskSequence::canonical_factorization: negative level");
  const int m = family_ == Family::kExplicit ? 0 : k / r_;
  switch (family_) {
  case Family::kUnivariateUp: {
    Mask base(1);
    base.set({0}, Dyadic(1));
    base.set({1}, Dyadic(1));
    std::vector<Basis> fulls(std::size_t(m), Basis({Direction({1})}));
    return FactoredSymbol(std::move(base), DirectionMultiset(), std::move(fulls));
  }
  case Family::kBivariateUp: {
    Mask base(2);
    base.set({0, 0}, Dyadic(2));
    base.set({1, 1}, Dyadic(2));
    DirectionMultiset extra;
    for (int i = 0; i < m; ++i)
      extra.add(Direction({1, 1}));
    std::vector<Basis> fulls(std::size_t(m) + 1,
                             Basis({Direction({1, 0}), Direction({0, 1})}));
    return FactoredSymbol(std::move(base), std::move(extra), std::move(fulls));
  }
  case Family::kPowers: {
    if (!is_nonnegative(powers_base_))
      return std::nullopt;
    const auto dec = smoothing_product_decomposition(powers_base_);
    if (!dec || !(dec->first == Dyadic(1 << dim_)))
      return std::nullopt;
    const auto vb = split_basis(dec->second, dim_);
    if (!vb)
      return std::nullopt;
    DirectionMultiset extra;
    for (int i = 0; i < m; ++i)
      for (const auto& v : vb->second.directions())
        extra.add(v);
    std::vector<Basis> fulls(std::size_t(m), vb->first);
    return FactoredSymbol(powers_base_, std::move(extra), std::move(fulls));
  }
  case Family::kExplicit:
    return std::nullopt;
  }
  throw std::logic_error("MaskSequence::canonical_factorization: bad family");
}

Rational MaskSequence::support_scale() const {
  if (family_ == Family::kExplicit)
    throw std::logic_error("MaskSequence::support_scale: no closed form for explicit lists");
  const BigInt p = BigInt(1) << r_;
  return Rational(p, p - 1);
}

} // namespace upsub
