#include "upsub/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace upsub {

namespace {

bool is_constant_term(const Mask& m) {
  if (m.size() != 1)
    return false;
  const auto& alpha = m.coefficients().begin()->first;
  return std::all_of(alpha.begin(), alpha.end(), [](int x) { return x == 0; });
}

bool all_positive(const Mask& m) {
  if (m.empty())
    return false;
  for (const auto& [alpha, c] : m.coefficients())
    if (c.sign() <= 0)
      return false;
  return true;
}

std::vector<Direction> peel_pool(int dim, const std::vector<Direction>& extra) {
  std::vector<Direction> pool;
  for (int i = 0; i < dim; ++i) {
    IndexVector e(std::size_t(dim), 0);
    e[std::size_t(i)] = 1;
    pool.emplace_back(e);
  }
  if (dim > 1)
    pool.emplace_back(IndexVector(std::size_t(dim), 1));
  for (const auto& v : extra) {
    if (v.dim() != dim)
      throw std::invalid_argument("classify: pool direction dimension mismatch");
    if (std::find(pool.begin(), pool.end(), v) == pool.end())
      pool.push_back(v);
  }
  return pool;
}

} // namespace

BasisSequence BasisSequence::constant(Basis v) {
  return BasisSequence(std::vector<Basis>{std::move(v)});
}

BasisSequence BasisSequence::list(std::vector<Basis> entries) {
  if (entries.empty())
    throw std::invalid_argument("BasisSequence: empty list");
  const int d = entries.front().dim();
  for (const auto& b : entries)
    if (b.dim() != d)
      throw std::invalid_argument("BasisSequence: mixed dimensions");
  return BasisSequence(std::move(entries));
}

const Basis& BasisSequence::at(int j) const {
  if (j < 1)
    throw std::invalid_argument("BasisSequence: slots are 1-based");
  const std::size_t i = std::min(std::size_t(j) - 1, entries_.size() - 1);
  return entries_[i];
}

ExtractionResult extract_full_factors(const Mask& a, const BasisSequence& v,
                                      int max_factors) {
  if (max_factors < 0)
    throw std::invalid_argument("extract_full_factors: negative factor cap");
  ExtractionResult res{0, a};
  while (res.count < max_factors) {
    const auto q = divide_exact(res.residual, full_smoothing_factor(v.at(res.count + 1)));
    if (!q || is_constant_term(*q))
      break;
    res.residual = *q;
    ++res.count;
  }
  return res;
}

ClassReport classify(const Mask& a, const BasisSequence& v, const ClassifyOptions& opts) {
  if (a.empty())
    throw std::invalid_argument("classify: zero mask");
  if (a.dim() != v.dim())
    throw std::invalid_argument("classify: basis dimension mismatch");

  ExtractionResult ext = extract_full_factors(a, v, opts.max_full_factors);

  ClassReport rep;
  rep.j = ext.count;
  rep.full_factors.reserve(std::size_t(ext.count));
  for (int i = 1; i <= ext.count; ++i)
    rep.full_factors.push_back(v.at(i));

  Mask base = std::move(ext.residual);
  const auto pool = peel_pool(a.dim(), opts.extra_pool);
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& dir : pool) {
      const auto q = divide_exact(base, smoothing_factor(dir, a.dim()));
      if (!q || is_constant_term(*q))
        continue;
      base = *q;
      rep.extra.add(dir);
      progress = true;
      break;
    }
  }

  rep.flags.positive = all_positive(base);
  rep.flags.sum_rule = satisfies_sum_rule(base);
  rep.base = base;

  if (rep.flags.positive) {
    rep.factorization.emplace(std::move(base), rep.extra, rep.full_factors);
    FactoredSymbol probe(rep.base, DirectionMultiset(), {v.at(1)});
    if (contractivity(probe, opts.max_contractivity_power)) {
      rep.flags.convergence = smoothing_product_decomposition(rep.base)
                                  ? BaseConvergence::kHeuristic
                                  : BaseConvergence::kCertified;
    }
  }
  return rep;
}

SequenceSmoothnessReport sequence_smoothness_report(const MaskSequence& seq,
                                                    const BasisSequence& v, int horizon,
                                                    const ClassifyOptions& opts) {
  if (horizon < 1)
    throw std::invalid_argument("sequence_smoothness_report: horizon must be >= 1");

  SequenceSmoothnessReport rep;
  rep.per_mask.reserve(std::size_t(horizon));
  rep.j.reserve(std::size_t(horizon));
  for (int k = 0; k < horizon; ++k) {
    rep.per_mask.push_back(classify(seq.mask(k), v, opts));
    rep.j.push_back(rep.per_mask.back().j);
  }

  rep.monotone = std::is_sorted(rep.j.begin(), rep.j.end());

  // Best guaranteed factor count over a tail window, allowing up to
  // horizon/2 irregular leading masks.
  rep.j_star = -1;
  for (int m = 0; m <= horizon / 2; ++m) {
    int tail_min = rep.j[std::size_t(m)];
    for (int k = m; k < horizon; ++k)
      tail_min = std::min(tail_min, rep.j[std::size_t(k)]);
    if (tail_min > rep.j_star) {
      rep.j_star = tail_min;
      rep.window_start = m;
    }
  }

  rep.weakest = BaseConvergence::kCertified;
  for (int k = rep.window_start; k < horizon; ++k) {
    const auto c = rep.per_mask[std::size_t(k)].flags.convergence;
    if (c == BaseConvergence::kFailed)
      rep.weakest = BaseConvergence::kFailed;
    else if (c == BaseConvergence::kHeuristic && rep.weakest == BaseConvergence::kCertified)
      rep.weakest = BaseConvergence::kHeuristic;
  }

  if (seq.family() == Family::kUnivariateUp || seq.family() == Family::kBivariateUp) {
    rep.law_period = seq.period();
    rep.c_infinity = true;
  } else if (seq.family() == Family::kPowers) {
    // The floor(k/r) law needs the base to split as 2^d s_D0 with a basis
    // inside D0; canonical_factorization performs exactly that check.
    if (seq.canonical_factorization(seq.period())) {
      rep.law_period = seq.period();
      rep.c_infinity = true;
    }
  }
  return rep;
}

} // namespace upsub
