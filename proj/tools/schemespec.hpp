#pragma once

#include <upsub/classify.hpp>
#include <upsub/sequence.hpp>
#include <upsub/subdivision.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace upsub::tool {

/// Anything wrong with a scheme spec: unknown key, missing key, bad value,
/// unreadable referenced file. Maps to exit code 2.
class SpecError : public std::runtime_error {
public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed, validated scheme description. Built entirely by parse_spec; the
/// defaulted members only exist because the sequence types have no empty
/// state.
struct SchemeSpec {
  MaskSequence sequence = MaskSequence::univariate_up(1);
  BasisSequence bases = BasisSequence::constant(Basis({Direction({1})}));
  std::vector<Direction> pool;

  int levels = 4;
  int inner = 4;
  double tau = 0.0;
  std::string out_dir = ".";
  SubdivisionOptions subdivision;
};

/// Flat `key = value` format, `#` starts a comment, blank lines ignored.
/// Keys: family (univariate_up | bivariate_up | powers | explicit), r, dim,
/// levels, inner, tau, basis, pool, out, base_mask, masks, lambda, threads,
/// cap. Unknown or repeated keys are errors. Mask paths resolve relative to
/// base_dir.
SchemeSpec parse_spec(std::istream& is, const std::string& base_dir);
SchemeSpec parse_spec_file(const std::string& path);

/// Mask reference as used by the spec keys: "bspline:m", "box3:m", or a path
/// to a mask file (resolved relative to base_dir when relative).
Mask load_mask_ref(const std::string& ref, const std::string& base_dir = "");

const char* family_name(Family f);

} // namespace upsub::tool
