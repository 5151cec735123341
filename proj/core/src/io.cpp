#include "upsub/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace upsub {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os)
    throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

void write_mask(std::ostream& os, const Mask& a) {
  os << "dim " << a.dim() << "\n";
  for (const auto& [alpha, c] : a.coefficients()) {
    for (int x : alpha)
      os << x << ' ';
    os << c.numerator() << ' ' << c.exponent() << "\n";
  }
}

void write_mask_file(const std::string& path, const Mask& a) {
  auto os = open_out(path);
  write_mask(os, a);
}

Mask read_mask(std::istream& is) {
  std::string keyword;
  int d = 0;
  if (!(is >> keyword >> d) || keyword != "dim" || d < 1)
    throw std::runtime_error("mask format: expected header 'dim d'");

  Mask a(d);
  IndexVector alpha(std::size_t(d), 0);
  std::string num;
  int exponent = 0;
  for (;;) {
    if (!(is >> alpha[0]))
      break;
    for (int i = 1; i < d; ++i)
      if (!(is >> alpha[std::size_t(i)]))
        throw std::runtime_error("mask format: truncated index");
    if (!(is >> num >> exponent))
      throw std::runtime_error("mask format: truncated coefficient");
    BigInt n;
    try {
      n = BigInt(num);
    } catch (const std::exception&) {
      throw std::runtime_error("mask format: bad numerator '" + num + "'");
    }
    if (exponent < 0)
      throw std::runtime_error("mask format: negative exponent");
    if (!a.at(alpha).is_zero())
      throw std::runtime_error("mask format: duplicate support point");
    a.set(alpha, Dyadic(n, exponent));
  }
  return a;
}

Mask read_mask_file(const std::string& path) {
  std::ifstream is(path);
  if (!is)
    throw std::runtime_error("cannot open mask file: " + path);
  return read_mask(is);
}

void write_samples_csv(std::ostream& os, const LatticeData& data) {
  const int d = data.dim();
  os << "level";
  for (int i = 1; i <= d; ++i)
    os << ",x_" << i;
  os << ",value\n";

  const Box& w = data.window();
  IndexVector gamma = w.lo;
  const std::int64_t total = w.num_points();
  const double* v = data.values().data();
  for (std::int64_t t = 0; t < total; ++t) {
    os << data.level();
    for (int i = 0; i < d; ++i)
      os << ',' << fmt_double(std::ldexp(double(gamma[std::size_t(i)]), -data.level()));
    os << ',' << fmt_double(v[t]) << "\n";
    for (int i = d - 1; i >= 0; --i) {
      if (gamma[std::size_t(i)] < w.hi[std::size_t(i)]) {
        ++gamma[std::size_t(i)];
        break;
      }
      gamma[std::size_t(i)] = w.lo[std::size_t(i)];
    }
  }
}

void write_samples_csv_file(const std::string& path, const LatticeData& data) {
  auto os = open_out(path);
  write_samples_csv(os, data);
}

void write_polytope_csv(std::ostream& os, const ConvexPolytope& p) {
  if (p.dim() == 1) {
    os << "lo,hi\n";
    os << rational_str(p.vertices().front().x[0]) << ','
       << rational_str(p.vertices().back().x[0]) << "\n";
    return;
  }
  os << "x_1,x_2\n";
  for (const auto& v : p.vertices())
    os << rational_str(v.x[0]) << ',' << rational_str(v.x[1]) << "\n";
}

void write_polytope_csv_file(const std::string& path, const ConvexPolytope& p) {
  auto os = open_out(path);
  write_polytope_csv(os, p);
}

void write_pgm(std::ostream& os, const LatticeData& data) {
  if (data.dim() != 2)
    throw std::invalid_argument("write_pgm: bivariate data required");
  const Box& w = data.window();
  const std::int64_t cols = w.hi[0] - w.lo[0] + 1;
  const std::int64_t rows = w.hi[1] - w.lo[1] + 1;

  double maxv = 0.0;
  for (double x : data.values())
    maxv = std::max(maxv, x);

  os << "P2\n" << cols << ' ' << rows << "\n65535\n";
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) {
      // values() is row-major with the first index slowest, so (x1, x2) =
      // (lo1 + j, lo2 + i) sits at offset j * rows_of_x2 + i.
      const double v = data.values()[std::size_t(j) * std::size_t(rows) + std::size_t(i)];
      long pixel = 0;
      if (maxv > 0.0 && v > 0.0)
        pixel = std::lround(v / maxv * 65535.0);
      if (pixel > 65535)
        pixel = 65535;
      os << pixel << (j + 1 == cols ? "" : " ");
    }
    os << "\n";
  }
}

void write_pgm_file(const std::string& path, const LatticeData& data) {
  auto os = open_out(path);
  write_pgm(os, data);
}

} // namespace upsub
