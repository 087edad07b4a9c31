#pragma once

// Areas of convex cyclic polygons by the triangle-sum route and by the
// circular-segment (integral) route, plus the three criteria that decide
// whether the circumcenter lies inside the polygon (PCI) or not (PNCI).

#include <cmath>
#include <numbers>
#include <vector>

#include "cyclorad/core.hpp"
#include "cyclorad/errors.hpp"

namespace cyclorad {

enum class area_method { sum, integral };

struct area_result {
  double total = 0;
  std::vector<double> per_side;  // isoceles triangle areas (l/4) sqrt(4r^2 - l^2)
  area_method method = area_method::sum;
  classification cls{polygon_class::pci, 0};
};

struct criterion_entry {
  double lhs = 0;
  double rhs = 0;
  bool satisfied = false;
};

struct criterion3_entry {
  std::vector<double> ratios;  // one per non-longest side, in input order
  bool satisfied = false;
};

struct criterion_report {
  criterion_entry criterion1;
  criterion_entry criterion2;
  criterion3_entry criterion3;
};

/// Area of the circular segment cut by a chord of length l:
/// r^2 asin(l/2r) - (l/4) sqrt(4r^2 - l^2).
inline double segment_area(double l, double r) {
  detail::require_chord(l, r);
  return r * r * std::asin(l / (2.0 * r)) -
         (l / 4.0) * std::sqrt((2.0 * r - l) * (2.0 * r + l));
}

namespace detail {

inline double triangle_term(double l, double r) {
  require_chord(l, r);
  return (l / 4.0) * std::sqrt((2.0 * r - l) * (2.0 * r + l));
}

}  // namespace detail

/// Necessary-and-sufficient PNCI test at radius r:
/// arccos form of the longest side's angle vs the sum over the others.
inline criterion_entry criterion1(const side_list& sides, double r, double tol = 1e-9) {
  const std::size_t m = sides.max_index();
  criterion_entry e;
  e.lhs = central_angle_arccos(sides[m], r);
  e.rhs = 0;
  for (std::size_t k = 0; k < sides.size(); ++k)
    if (k != m) e.rhs += central_angle_arccos(sides[k], r);
  e.satisfied = std::abs(e.lhs - e.rhs) <= tol;
  return e;
}

/// Derivative-matching condition 1/sqrt(4(r/l_n)^2-1) = sum over the others.
/// Necessary per the source derivation; reported, never used for dispatch.
inline criterion_entry criterion2(const side_list& sides, double r, double tol = 1e-9) {
  const std::size_t m = sides.max_index();
  criterion_entry e;
  for (std::size_t k = 0; k < sides.size(); ++k) {
    const double q = 4.0 * (r / sides[k]) * (r / sides[k]) - 1.0;
    if (q <= 0) raise(errc::divergent_term, "criterion 2 diverges at r = l/2");
    const double term = 1.0 / std::sqrt(q);
    if (k == m)
      e.lhs = term;
    else
      e.rhs += term;
  }
  e.satisfied = std::abs(e.lhs - e.rhs) <= tol;
  return e;
}

/// Ratio test: sqrt(4(r/l_n)^2-1) / sqrt(4(r/l_k)^2-1) < 1 for every other
/// side. Two tied longest sides give a ratio of exactly 1, forcing PCI.
/// The numerator may vanish (longest side a diameter); a vanishing
/// denominator is the divergent case.
inline criterion3_entry criterion3(const side_list& sides, double r, double tol = 1e-9) {
  const std::size_t m = sides.max_index();
  const double qn = std::max(4.0 * (r / sides[m]) * (r / sides[m]) - 1.0, 0.0);
  criterion3_entry e;
  e.satisfied = true;
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (k == m) continue;
    const double qk = 4.0 * (r / sides[k]) * (r / sides[k]) - 1.0;
    if (qk <= 0) raise(errc::divergent_term, "criterion 3 diverges at r = l/2");
    const double ratio = std::sqrt(qn) / std::sqrt(qk);
    e.ratios.push_back(ratio);
    if (!(ratio < 1.0 - tol)) e.satisfied = false;
  }
  return e;
}

inline criterion_report criteria_report(const side_list& sides, double r,
                                        double tol = 1e-9) {
  criterion_report rep;
  rep.criterion1 = criterion1(sides, r, tol);
  rep.criterion3 = criterion3(sides, r, tol);
  const double rmin = sides.max_length() / 2.0;
  if (r > rmin * (1 + 1e-12)) rep.criterion2 = criterion2(sides, r, tol);
  return rep;
}

namespace detail {

// The classification must describe the polygon the radius solves, otherwise
// both area formulas compute areas of a figure that does not close.
inline void check_classification(const side_list& sides, double r,
                                 const classification& cls, double tol) {
  if (cls.kind == polygon_class::center_on_side) {
    if (std::abs(r - sides.max_length() / 2.0) > tol * r)
      raise(errc::inconsistent_classification,
            "CenterOnSide requires r = l_max/2");
    return;
  }
  const bool pnci_holds = criterion1(sides, r, 1e-6).satisfied;
  if (cls.kind == polygon_class::pnci && !pnci_holds)
    raise(errc::inconsistent_classification,
          "claimed PNCI but criterion 1 fails at this radius");
  if (cls.kind == polygon_class::pci && pnci_holds)
    raise(errc::inconsistent_classification,
          "claimed PCI but criterion 1 holds at this radius");
}

}  // namespace detail

/// Triangle-sum area: (1/4) sum l_k sqrt(4r^2 - l_k^2); for PNCI the longest
/// side's triangle lies outside the polygon and is subtracted instead.
inline area_result area_sum(const side_list& sides, double r, const classification& cls,
                            double tol = 1e-6) {
  detail::check_classification(sides, r, cls, tol);
  area_result out;
  out.method = area_method::sum;
  out.cls = cls;
  for (double l : sides.lengths()) out.per_side.push_back(detail::triangle_term(l, r));
  for (std::size_t k = 0; k < sides.size(); ++k) {
    double t = out.per_side[k];
    if (cls.kind == polygon_class::pnci && k == cls.longest_index) t = -t;
    out.total += t;
  }
  return out;
}

/// Segment-complement area: pi r^2 - sum of segments for PCI; for PNCI the
/// longest side's complement flips, giving 2 A_n - sum A_k.
inline area_result area_integral(const side_list& sides, double r,
                                 const classification& cls, double tol = 1e-6) {
  detail::check_classification(sides, r, cls, tol);
  area_result out;
  out.method = area_method::integral;
  out.cls = cls;
  for (double l : sides.lengths()) out.per_side.push_back(detail::triangle_term(l, r));
  double segments = 0;
  for (double l : sides.lengths()) segments += segment_area(l, r);
  if (cls.kind == polygon_class::pnci)
    out.total = 2.0 * segment_area(sides[cls.longest_index], r) - segments;
  else
    out.total = std::numbers::pi * r * r - segments;
  return out;
}

}  // namespace cyclorad
