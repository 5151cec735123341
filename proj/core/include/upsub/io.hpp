#pragma once

#include "upsub/lattice.hpp"
#include "upsub/mask.hpp"
#include "upsub/polytope.hpp"

#include <iosfwd>
#include <string>

namespace upsub {

/// Plain-text mask format: header line `dim d`, then one line per support
/// point, `alpha_1 ... alpha_d numerator exponent` (value numerator/2^exponent),
/// sorted lexicographically. Round-trips every mask bit for bit.
void write_mask(std::ostream& os, const Mask& a);
void write_mask_file(const std::string& path, const Mask& a);
Mask read_mask(std::istream& is);
Mask read_mask_file(const std::string& path);

/// CSV `level,x_1[,x_2],value` over the data window in index order; physical
/// coordinates; floats with 17 significant digits, `.` decimal separator.
void write_samples_csv(std::ostream& os, const LatticeData& data);
void write_samples_csv_file(const std::string& path, const LatticeData& data);

/// CSV of a polytope: one `lo,hi` row for intervals; counter-clockwise
/// `x_1,x_2` vertex rows for polygons. Entries are exact `p/q` rationals.
void write_polytope_csv(std::ostream& os, const ConvexPolytope& p);
void write_polytope_csv_file(const std::string& path, const ConvexPolytope& p);

/// ASCII PGM (P2) heightmap of bivariate data: maxval 65535, values scaled
/// linearly from [0, max sample]; negatives clamp to 0. Column j is the j-th
/// first coordinate, row i the i-th smallest second coordinate, so the second
/// coordinate grows downward in the image.
void write_pgm(std::ostream& os, const LatticeData& data);
void write_pgm_file(const std::string& path, const LatticeData& data);

} // namespace upsub
