#include "upsub/subdivision.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <thread>
#include <utility>

namespace upsub {

namespace {

std::vector<std::int64_t> strides_of(const Box& b) {
  const int d = b.dim();
  std::vector<std::int64_t> s(d, 1);
  for (int i = d - 2; i >= 0; --i)
    s[i] = s[i + 1] * (b.hi[i + 1] - b.lo[i + 1] + 1);
  return s;
}

/// Mask entries flattened per parity class of the index, in lexicographic
/// order within each class. Class i: bit j of i = parity of coordinate j.
struct ParityBuckets {
  int dim;
  std::vector<std::vector<int>> index;     // d ints per entry
  std::vector<std::vector<double>> weight;

  explicit ParityBuckets(const Mask& a) : dim(a.dim()) {
    index.resize(std::size_t(1) << dim);
    weight.resize(std::size_t(1) << dim);
    for (const auto& [alpha, c] : a.coefficients()) {
      std::size_t key = 0;
      for (int j = 0; j < dim; ++j)
        key |= std::size_t(alpha[j] & 1) << j;
      index[key].insert(index[key].end(), alpha.begin(), alpha.end());
      weight[key].push_back(c.to_double());
    }
  }
};

/// Gather evaluation of a contiguous range of output points. Accumulation at
/// each point runs over the point's parity bucket, i.e. in lexicographic mask
/// order, matching the scatter path bit for bit.
void gather_chunk(const ParityBuckets& pb, const LatticeData& f,
                  const std::vector<std::int64_t>& fstr, LatticeData& out,
                  std::int64_t first, std::int64_t last) {
  const int d = f.dim();
  const Box& fw = f.window();
  const Box& ow = out.window();
  const double* fv = f.values().data();
  double* ov = out.values().data();

  IndexVector gamma = ow.index_at(first);
  for (std::int64_t lin = first; lin < last; ++lin) {
    std::size_t key = 0;
    for (int j = 0; j < d; ++j)
      key |= std::size_t(gamma[j] & 1) << j;
    const auto& idx = pb.index[key];
    const auto& wts = pb.weight[key];
    double acc = 0.0;
    for (std::size_t e = 0; e < wts.size(); ++e) {
      const int* alpha = idx.data() + std::size_t(d) * e;
      std::int64_t off = 0;
      bool inside = true;
      for (int j = 0; j < d; ++j) {
        int beta = (gamma[j] - alpha[j]) >> 1;
        if (beta < fw.lo[j] || beta > fw.hi[j]) {
          inside = false;
          break;
        }
        off += fstr[j] * (beta - fw.lo[j]);
      }
      if (inside)
        acc += wts[e] * fv[off];
    }
    ov[lin] = acc;

    for (int j = d - 1; j >= 0; --j) {
      if (gamma[j] < ow.hi[j]) {
        ++gamma[j];
        break;
      }
      gamma[j] = ow.lo[j];
    }
  }
}

/// Scatter evaluation: for each mask entry, out[2 beta + alpha] += w f[beta]
/// over whole rows of f. Entries are visited in lexicographic order, so each
/// output point accumulates its terms in the same order as the gather path.
void scatter_all(const Mask& a, const LatticeData& f, LatticeData& out) {
  const int d = f.dim();
  const Box& fw = f.window();
  const Box& ow = out.window();
  const auto ostr = strides_of(ow);
  const double* fv = f.values().data();
  double* ov = out.values().data();
  const std::int64_t rowlen = fw.hi[d - 1] - fw.lo[d - 1] + 1;

  for (const auto& [alpha, c] : a.coefficients()) {
    const double w = c.to_double();
    IndexVector beta = fw.lo;
    std::int64_t fbase = 0;
    for (;;) {
      std::int64_t obase = 0;
      for (int j = 0; j < d; ++j)
        obase += ostr[j] * (2 * beta[j] + alpha[j] - ow.lo[j]);
      const double* fp = fv + fbase;
      double* op = ov + obase;
      for (std::int64_t i = 0; i < rowlen; ++i)
        op[2 * i] += w * fp[i];
      fbase += rowlen;

      int j = d - 2;
      for (; j >= 0; --j) {
        if (beta[j] < fw.hi[j]) {
          ++beta[j];
          break;
        }
        beta[j] = fw.lo[j];
      }
      if (j < 0)
        break;
    }
  }
}

} // namespace

LatticeData apply_subdivision(const Mask& a, const LatticeData& f,
                              const SubdivisionOptions& opts) {
  if (a.dim() != f.dim())
    throw std::invalid_argument("apply_subdivision: dimension mismatch");
  if (a.empty())
    throw std::invalid_argument("apply_subdivision: empty mask");

  const int d = f.dim();
  const IndexVector alo = a.min_corner(), ahi = a.max_corner();
  Box ow;
  ow.lo.resize(d);
  ow.hi.resize(d);
  for (int j = 0; j < d; ++j) {
    ow.lo[j] = 2 * f.window().lo[j] + alo[j];
    ow.hi[j] = 2 * f.window().hi[j] + ahi[j];
  }
  const std::int64_t n = ow.num_points();
  if (n > opts.window_cap)
    throw WindowCapExceeded("apply_subdivision: output window needs " + std::to_string(n) +
                            " points, cap is " + std::to_string(opts.window_cap));

  LatticeData out(f.level() + 1, ow);
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    scatter_all(a, f, out);
    return out;
  }

  ParityBuckets pb(a);
  const auto fstr = strides_of(f.window());
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(threads));
  const std::int64_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::int64_t first = std::min<std::int64_t>(n, std::int64_t(t) * chunk);
    const std::int64_t last = std::min<std::int64_t>(n, first + chunk);
    if (first >= last)
      break;
    pool.emplace_back([&, first, last] { gather_chunk(pb, f, fstr, out, first, last); });
  }
  for (auto& th : pool)
    th.join();
  return out;
}

Mask subdivide_exact(const Mask& a, const Mask& f) {
  if (a.dim() != f.dim())
    throw std::invalid_argument("subdivide_exact: dimension mismatch");
  return product(a, f.upsampled(2));
}

Dyadic operator_norm(const Mask& a) { return iterated_norm(a, 1); }

Dyadic iterated_norm(const Mask& a, int n) {
  if (n < 1)
    throw std::invalid_argument("iterated_norm: n must be >= 1");
  Mask iter = a;
  for (int i = 1; i < n; ++i)
    iter = product(iter, a.upsampled(1 << i));

  const int M = 1 << n;
  std::map<IndexVector, Dyadic> coset;
  IndexVector key(std::size_t(a.dim()));
  for (const auto& [alpha, c] : iter.coefficients()) {
    for (std::size_t j = 0; j < key.size(); ++j)
      key[j] = ((alpha[j] % M) + M) % M;
    coset[key] += c.abs();
  }
  Dyadic best;
  for (const auto& [eps, s] : coset)
    best = std::max(best, s);
  return best;
}

FactoredSymbol::FactoredSymbol(Mask base_in, DirectionMultiset extra_in,
                               std::vector<Basis> fulls_in)
    : base(std::move(base_in)), extra(std::move(extra_in)), full_factors(std::move(fulls_in)) {
  if (base.empty())
    throw std::invalid_argument("FactoredSymbol: empty base");
  for (const auto& [alpha, c] : base.coefficients())
    if (c.sign() <= 0)
      throw std::invalid_argument("FactoredSymbol: base must have positive coefficients");
  for (const auto& v : extra.directions())
    if (v.dim() != base.dim())
      throw std::invalid_argument("FactoredSymbol: direction dimension mismatch");
  for (const auto& V : full_factors)
    if (V.dim() != base.dim())
      throw std::invalid_argument("FactoredSymbol: basis dimension mismatch");
}

Mask FactoredSymbol::reconstruct() const {
  Mask m = product(base, directional_product(extra, base.dim()));
  for (const auto& V : full_factors)
    m = product(m, full_smoothing_factor(V));
  return m;
}

DiagonalDifferenceScheme difference_scheme(const FactoredSymbol& c) {
  if (c.full_factors.empty())
    throw std::invalid_argument("difference_scheme: symbol has no full smoothing factor");

  const int d = c.dim();
  const Basis& V = c.full_factors.front();
  DirectionMultiset folded = c.extra;
  for (std::size_t j = 1; j < c.full_factors.size(); ++j)
    for (const auto& v : c.full_factors[j].directions())
      folded.add(v);

  const Mask head = product(c.base.scaled(Dyadic(BigInt(1), 1)),
                            directional_product(folded, d));
  DiagonalDifferenceScheme ds{V, {}};
  ds.diagonal.reserve(std::size_t(d));
  for (int i = 0; i < d; ++i) {
    Mask rest = Mask::delta(d);
    for (int j = 0; j < d; ++j)
      if (j != i)
        rest = product(rest, smoothing_factor(V.at(j), d));
    ds.diagonal.push_back(product(head, rest));
  }
  return ds;
}

std::vector<Mask> divided_difference_symbols(const FactoredSymbol& c) {
  auto ds = difference_scheme(c);
  std::vector<Mask> out;
  out.reserve(ds.diagonal.size());
  for (const auto& b : ds.diagonal)
    out.push_back(b.scaled(Dyadic(2)));
  return out;
}

std::optional<ContractivityReport> contractivity(const FactoredSymbol& c, int max_L) {
  DiagonalDifferenceScheme ds = difference_scheme(c);
  const Dyadic one(1);
  for (int n = 1; n <= max_L; ++n) {
    std::vector<Dyadic> per;
    per.reserve(ds.diagonal.size());
    Dyadic rho;
    for (const auto& b : ds.diagonal) {
      per.push_back(iterated_norm(b, n));
      rho = std::max(rho, per.back());
    }
    if (rho < one)
      return ContractivityReport{n, rho, std::move(per), std::move(ds)};
  }
  return std::nullopt;
}

bool commutation_holds(const FactoredSymbol& c, const Mask& data) {
  const DiagonalDifferenceScheme ds = difference_scheme(c);
  const Mask cm = c.reconstruct();
  const Mask scf = subdivide_exact(cm, data);
  for (int i = 0; i < ds.directions.dim(); ++i) {
    const Direction& v = ds.directions.at(i);
    const Mask lhs = backward_difference(scf, v);
    const Mask rhs = subdivide_exact(ds.diagonal[std::size_t(i)], backward_difference(data, v));
    if (!(lhs == rhs))
      return false;
  }
  return true;
}

} // namespace upsub
