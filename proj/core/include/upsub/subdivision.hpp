#pragma once

#include "upsub/lattice.hpp"
#include "upsub/mask.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace upsub {

struct SubdivisionOptions {
  /// Hard limit on the number of points in any allocated window.
  std::int64_t window_cap = std::int64_t(1) << 26;
  int threads = 1;
};

class WindowCapExceeded : public std::runtime_error {
public:
  explicit WindowCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// One subdivision step (S_a f)(gamma) = sum_beta a(gamma - 2 beta) f(beta)
/// on dense data. The output window is 2 * window(f) + support box of a.
/// Per-point accumulation always runs in lexicographic mask order, so results
/// are bitwise reproducible and independent of the thread count.
LatticeData apply_subdivision(const Mask& a, const LatticeData& f,
                              const SubdivisionOptions& opts = {});

/// Exact subdivision step on finitely supported dyadic data, via the symbol
/// identity (S_a f)(z) = a(z) f(z^2).
Mask subdivide_exact(const Mask& a, const Mask& f);

/// max over cosets eps in {0,1}^d of sum_beta |a(eps + 2 beta)|. This is the
/// sup-norm of the subdivision operator.
Dyadic operator_norm(const Mask& a);

/// Norm of the n-fold operator S_a^n, computed from the iterated symbol
/// a(z) a(z^2) ... a(z^(2^(n-1))) with cosets mod 2^n per coordinate.
Dyadic iterated_norm(const Mask& a, int n);

/// Symbol in factored form c(z) = a(z) s_D(z) prod_j s_{V_j}(z) with a
/// positive base. The factors are data; nothing here claims maximality.
struct FactoredSymbol {
  Mask base;
  DirectionMultiset extra;
  std::vector<Basis> full_factors;

  FactoredSymbol(Mask base, DirectionMultiset extra, std::vector<Basis> full_factors);

  int dim() const { return base.dim(); }
  Mask reconstruct() const;
};

/// Diagonal difference scheme attached to the first full factor V of a
/// factored symbol: b_{i,i}(z) = (a(z)/2) s_D(z) s_{V \ v_i}(z), with any
/// further full factors folded into s_D. Mixed (off-diagonal) entries vanish
/// for symbols of this shape, which is why only the diagonal is stored.
struct DiagonalDifferenceScheme {
  Basis directions;
  std::vector<Mask> diagonal;
};

/// Throws std::invalid_argument when the symbol has no full factor.
DiagonalDifferenceScheme difference_scheme(const FactoredSymbol& c);

/// Divided difference symbols c*_i = 2 b_{i,i}.
std::vector<Mask> divided_difference_symbols(const FactoredSymbol& c);

struct ContractivityReport {
  /// First power of the difference scheme whose norm drops below one.
  int L = 0;
  /// Exact value of that norm, max over the scheme's directions.
  Dyadic rho;
  std::vector<Dyadic> per_direction;
  DiagonalDifferenceScheme scheme;
};

/// Search n = 1..max_L for max_i ||S_{b_ii}^n|| < 1; nullopt when no tested
/// power contracts. Norms are exact dyadics.
std::optional<ContractivityReport> contractivity(const FactoredSymbol& c, int max_L = 8);

/// Exact check that differencing commutes with subdivision:
/// grad_v (S_c f) = S_{b_ii} (grad_v f) for every direction v of the first
/// full factor, with backward differences grad_v f = f - f(. - v).
bool commutation_holds(const FactoredSymbol& c, const Mask& data);

} // namespace upsub
