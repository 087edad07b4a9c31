#pragma once

// Exact closed-form radii and areas for triangles, cyclic quadrilaterals and
// regular {n/q} polygons. These are independent of the generic solver and are
// used to cross-check it.

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cyclorad/errors.hpp"

namespace cyclorad {

struct triangle_sides {
  double a, b, c;
  double semiperimeter() const { return (a + b + c) / 2.0; }
};

inline triangle_sides make_triangle(double a, double b, double c) {
  if (!(a > 0) || !(b > 0) || !(c > 0))
    raise(errc::non_positive_side, "triangle sides must be positive");
  if (!(a + b > c && b + c > a && a + c > b))
    raise(errc::degenerate_polygon, "triangle inequality violated");
  return {a, b, c};
}

/// r = abc / sqrt((a+b+c)(b+c-a)(a+b-c)(a+c-b))
inline double radius_triangle(const triangle_sides& t) {
  const double d = (t.a + t.b + t.c) * (t.b + t.c - t.a) * (t.a + t.b - t.c) *
                   (t.a + t.c - t.b);
  return t.a * t.b * t.c / std::sqrt(d);
}

/// Heron: A = sqrt(s (s-a)(s-b)(s-c))
inline double area_triangle_heron(const triangle_sides& t) {
  const double s = t.semiperimeter();
  return std::sqrt(s * (s - t.a) * (s - t.b) * (s - t.c));
}

enum class crossed_root_status { real_root, not_real, indeterminate };

constexpr std::string_view crossed_root_status_name(crossed_root_status s) {
  switch (s) {
    case crossed_root_status::real_root: return "Real";
    case crossed_root_status::not_real: return "NotReal";
    case crossed_root_status::indeterminate: return "Indeterminate";
  }
  return "?";
}

struct quadrilateral_radii {
  double convex = 0;
  crossed_root_status crossed_status = crossed_root_status::not_real;
  double crossed = 0;  // valid only when crossed_status == real_root
};

/// Convex root (Parameshvara's formula, radicands written positive) and the
/// crossed-quadrilateral root when its radicand quotient is positive. For the
/// square both crossed radicands vanish: Indeterminate.
inline quadrilateral_radii radius_quadrilateral(double a, double b, double c, double d) {
  for (double x : {a, b, c, d})
    if (!(x > 0)) raise(errc::non_positive_side, "quadrilateral sides must be positive");
  const double sum = a + b + c + d;
  for (double x : {a, b, c, d})
    if (!(x < sum - x))
      raise(errc::degenerate_polygon, "each side must be shorter than the sum of the others");

  quadrilateral_radii out;
  const double num_c = (a * b + c * d) * (a * c + b * d) * (a * d + b * c);
  const double den_c = (-a + b + c + d) * (a - b + c + d) * (a + b - c + d) * (a + b + c - d);
  out.convex = std::sqrt(num_c) / std::sqrt(den_c);

  const double num_x = (a * d - b * c) * (a * c - b * d) * (a * b - c * d);
  const double den_x = (a + b - c - d) * (a - b + c - d) * (a - b - c + d) * sum;
  const bool num_zero = std::abs(num_x) <= 1e-14 * std::pow(sum, 6);
  const bool den_zero = std::abs(den_x) <= 1e-14 * std::pow(sum, 4);
  if (num_zero && den_zero) {
    out.crossed_status = crossed_root_status::indeterminate;
  } else if (den_zero || num_x / den_x <= 0) {
    out.crossed_status = crossed_root_status::not_real;
  } else {
    out.crossed_status = crossed_root_status::real_root;
    out.crossed = std::sqrt(num_x / den_x);
  }
  return out;
}

/// Circumradius of the regular {n/q} polygon with side l: l / (2 sin(pi q / n)).
inline double radius_regular(int n, double l, int q = 1) {
  if (n < 3) raise(errc::too_few_sides, "regular polygon needs n >= 3");
  if (!(l > 0)) raise(errc::non_positive_side, "side length must be positive");
  if (q < 1 || (q != 1 && 2 * q >= n))
    raise(errc::invalid_star, "star density must satisfy 1 <= q < n/2");
  if (std::gcd(n, q) != 1)
    raise(errc::invalid_star, "n and q must be coprime, got gcd(" + std::to_string(n) +
                                  "," + std::to_string(q) + ") != 1");
  return l / (2.0 * std::sin(std::numbers::pi * q / n));
}

}  // namespace cyclorad
