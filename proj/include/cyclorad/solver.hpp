#pragma once

// Root-finding for the convex and signed (crossed) radius equations.
//
// The closure condition prod_k e^{i sigma_k alpha_k(r)} = e^{i 2 pi E} is
// solved as the equivalent one-dimensional angle equation
//   sum_k sigma_k * 2 asin(l_k / 2r) = 2 pi E,
// which is n-independent and avoids the symbolic expansion (that path lives
// in polynomial.hpp). Convex PCI uses E = 1 with all signs +; convex PNCI is
// alpha_max = sum of the others.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cyclorad/core.hpp"
#include "cyclorad/errors.hpp"

namespace cyclorad {

enum class branch_kind { convex_pci, convex_pnci, signed_equation };

constexpr std::string_view branch_name(branch_kind b) {
  switch (b) {
    case branch_kind::convex_pci: return "ConvexPCI";
    case branch_kind::convex_pnci: return "ConvexPNCI";
    case branch_kind::signed_equation: return "Signed";
  }
  return "?";
}

struct radius_solution {
  double r = 0;
  classification cls{polygon_class::pci, 0};
  branch_kind branch = branch_kind::convex_pci;
  int winding = 1;  // E of the solved equation; 0 for the PNCI balance equation
  std::optional<signature> sig;  // present for signed_equation
  double residual = 0;           // |product_residual| at r
  double equation_value = 0;     // signed angle-equation residual, radians
};

struct rejected_root {
  double r;
  std::string reason;
};

struct root_set {
  std::vector<radius_solution> roots;  // sorted descending by r, deduplicated
  std::vector<rejected_root> rejected;
};

struct convex_selection {
  radius_solution root;
  std::size_t qualifying = 0;  // size of the candidate set Phi
};

namespace detail {

inline double angle_sum(const side_list& sides, double r) {
  double s = 0;
  for (double l : sides.lengths()) s += 2.0 * std::asin(l / (2.0 * r));
  return s;
}

inline double angle_sum_derivative(const side_list& sides, double r) {
  double s = 0;
  for (double l : sides.lengths()) s += central_angle_derivative(l, r);
  return s;
}

inline double signed_angle_sum(const side_list& sides, const signature& sig, double r) {
  double s = 0;
  for (std::size_t k = 0; k < sides.size(); ++k)
    s += sig.signs[k] * 2.0 * std::asin(sides[k] / (2.0 * r));
  return s;
}

inline double signed_angle_sum_derivative(const side_list& sides, const signature& sig,
                                          double r) {
  double s = 0;
  for (std::size_t k = 0; k < sides.size(); ++k)
    s += sig.signs[k] * central_angle_derivative(sides[k], r);
  return s;
}

// Newton polishing inside a guaranteed bracket, with bisection whenever the
// Newton step leaves the bracket or the derivative is unusable (it blows up
// at r = l_max/2 where the longest chord is a diameter).
template <class F, class DF>
double polish_root(F&& f, DF&& df, double lo, double hi, double flo, double fhi) {
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double fx = f(x);
    if (fx == 0) return x;
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    double d = df(x);
    double step = std::isfinite(d) && d != 0 ? fx / d : std::numeric_limits<double>::infinity();
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(x)) return xn;
    x = xn;
  }
  return x;
}

inline radius_solution make_solution(const side_list& sides, double r, classification cls,
                                     branch_kind branch, int winding,
                                     std::optional<signature> sig, double eq_value) {
  radius_solution sol;
  sol.r = r;
  sol.cls = cls;
  sol.branch = branch;
  sol.winding = winding;
  sol.sig = std::move(sig);
  sol.equation_value = eq_value;
  if (sol.sig) {
    sol.residual = std::abs(product_residual(sides, *sol.sig, r));
  } else if (branch == branch_kind::convex_pnci) {
    // the PNCI closure is conj(f_max) * prod of the others = 1
    signature pnci_sig = signature::all_plus(sides.size());
    pnci_sig.signs[cls.longest_index] = -1;
    sol.residual = std::abs(product_residual(sides, pnci_sig, r));
  } else {
    sol.residual = std::abs(product_residual(sides, r));
  }
  return sol;
}

inline void sort_and_dedupe(root_set& set, double rel_tol) {
  std::sort(set.roots.begin(), set.roots.end(),
            [](const radius_solution& a, const radius_solution& b) { return a.r > b.r; });
  std::vector<radius_solution> out;
  for (auto& sol : set.roots) {
    if (!out.empty() && std::abs(out.back().r - sol.r) <= rel_tol * std::abs(sol.r)) continue;
    out.push_back(std::move(sol));
  }
  set.roots = std::move(out);
}

// A root sitting exactly at r = l_max/2 turns every longest side into a
// diameter chord; with two or more of them the traversal degenerates
// (antipodal vertices repeat), so only a single-diameter boundary root is
// geometric.
inline bool boundary_root_ok(const side_list& sides) { return sides.count_at_max() == 1; }

constexpr int max_bracket_doublings = 60;

}  // namespace detail

/// Solve the convex radius equation after a-priori classification.
/// PCI: sum of central angles = 2 pi (strictly decreasing in r, unique root).
/// PNCI: angle of the longest side = sum of the others.
/// CenterOnSide: r = l_max/2 exactly.
inline radius_solution solve_radius_convex(const side_list& sides,
                                           const tolerances& tol = {}) {
  const classification cls = classify_a_priori(sides, tol.classify_angle);
  const double two_pi = 2.0 * std::numbers::pi;
  const double rmin = sides.max_length() / 2.0;

  if (cls.kind == polygon_class::center_on_side) {
    double eq = detail::angle_sum(sides, rmin) - two_pi;
    return detail::make_solution(sides, rmin, cls, branch_kind::convex_pci, 1,
                                 std::nullopt, eq);
  }

  if (cls.kind == polygon_class::pci) {
    auto f = [&](double r) { return detail::angle_sum(sides, r) - two_pi; };
    auto df = [&](double r) { return detail::angle_sum_derivative(sides, r); };
    double lo = rmin, flo = f(lo);
    double hi = std::max(sides.max_length(), sides.perimeter() / 2.0);
    double fhi = f(hi);
    int doublings = 0;
    while (fhi > 0) {
      if (++doublings > detail::max_bracket_doublings)
        raise(errc::no_convergence, "PCI bracket expansion failed");
      hi *= 2;
      fhi = f(hi);
    }
    double r = detail::polish_root(f, df, lo, hi, flo, fhi);
    return detail::make_solution(sides, r, cls, branch_kind::convex_pci, 1, std::nullopt,
                                 f(r));
  }

  // PNCI: G(r) = alpha_max - sum_{k != max} alpha_k, G(rmin) > 0, G -> 0- at
  // infinity with exactly one sign change (the convex polygon is unique).
  const std::size_t m = sides.max_index();
  auto g = [&](double r) {
    double s = 2.0 * std::asin(sides[m] / (2.0 * r));
    for (std::size_t k = 0; k < sides.size(); ++k)
      if (k != m) s -= 2.0 * std::asin(sides[k] / (2.0 * r));
    return s;
  };
  auto dg = [&](double r) {
    double s = detail::central_angle_derivative(sides[m], r);
    for (std::size_t k = 0; k < sides.size(); ++k)
      if (k != m) s -= detail::central_angle_derivative(sides[k], r);
    return s;
  };
  double lo = rmin, flo = g(lo);
  double hi = std::max(sides.max_length(), sides.perimeter() / 2.0);
  double fhi = g(hi);
  int doublings = 0;
  while (fhi > 0) {
    if (++doublings > detail::max_bracket_doublings)
      raise(errc::no_convergence, "PNCI bracket expansion failed");
    hi *= 2;
    fhi = g(hi);
  }
  double r = detail::polish_root(g, dg, lo, hi, flo, fhi);
  return detail::make_solution(sides, r, cls, branch_kind::convex_pnci, 0, std::nullopt,
                               g(r));
}

/// Find every r >= l_max/2 with sum_k sigma_k alpha_k(r) = 2 pi E. The mixed-
/// sign function is not monotone, so the interval is scanned on a dense grid
/// (in t = l_max/2r) with local refinement, and every sign-change bracket is
/// polished. An empty root set is a reportable outcome, not an error.
inline root_set solve_radius_signed(const side_list& sides, const signature& sig,
                                    const tolerances& tol = {}) {
  validate_signature(sig, sides.size());
  const classification cls = classify_a_priori(sides, tol.classify_angle);
  const double two_pi = 2.0 * std::numbers::pi;
  const double target = two_pi * sig.winding;
  const double rmin = sides.max_length() / 2.0;

  auto f = [&](double r) { return detail::signed_angle_sum(sides, sig, r) - target; };
  auto df = [&](double r) { return detail::signed_angle_sum_derivative(sides, sig, r); };

  // Upper end: once the positive-sign angles alone sum below the target the
  // equation has no further roots.
  side_list plus_sides = [&] {
    std::vector<double> v;
    for (std::size_t k = 0; k < sides.size(); ++k)
      if (sig.signs[k] > 0) v.push_back(sides[k]);
    return side_list(std::move(v));
  }();
  double rmax = std::max(sides.max_length(), sides.perimeter() / 2.0);
  int doublings = 0;
  while (detail::angle_sum(plus_sides, rmax) >= target &&
         doublings++ < detail::max_bracket_doublings)
    rmax *= 2;

  root_set out;
  auto add_root = [&](double r) {
    out.roots.push_back(detail::make_solution(sides, r, cls, branch_kind::signed_equation,
                                              sig.winding, sig, f(r)));
  };

  // Boundary root at r = l_max/2.
  if (std::abs(f(rmin)) <= tol.angle_residual) {
    if (detail::boundary_root_ok(sides))
      add_root(rmin);
    else
      out.rejected.push_back({rmin, "degenerate boundary root: multiple diameter chords"});
  }

  // Scan in t = l_max / 2r over (0, 1]; angles vary fastest near t = 1.
  const double tmin = rmin / rmax;
  const int cells = 4096;
  auto r_of_t = [&](double t) { return rmin / t; };

  std::function<void(double, double, double, double, int)> scan =
      [&](double t0, double t1, double f0, double f1, int depth) {
        const bool sign_change = (f0 > 0) != (f1 > 0);
        if (depth >= 12) {
          if (sign_change) {
            double ra = r_of_t(t1), rb = r_of_t(t0);  // ra < rb
            add_root(detail::polish_root(f, df, ra, rb, f1, f0));
          }
          return;
        }
        // Subdivide sign-change cells too: a cell can hide an odd number of
        // crossings > 1. Refine non-crossing cells where the function moves
        // fast enough, or sits close enough to zero, to hide a double
        // crossing between nodes.
        if (sign_change || std::abs(f1 - f0) > 0.25 ||
            std::min(std::abs(f0), std::abs(f1)) < std::abs(f1 - f0)) {
          double tm = 0.5 * (t0 + t1);
          double fm = f(r_of_t(tm));
          scan(t0, tm, f0, fm, depth + 1);
          scan(tm, t1, fm, f1, depth + 1);
        }
      };

  double tprev = tmin;
  double fprev = f(r_of_t(tprev));
  for (int i = 1; i <= cells; ++i) {
    double t = tmin + (1.0 - tmin) * i / cells;
    if (i == cells) t = 1.0;
    double ft = f(r_of_t(t));
    scan(tprev, t, fprev, ft, 0);
    tprev = t;
    fprev = ft;
  }

  // Drop anything that polished onto a degenerate boundary root (the explicit
  // boundary handling above already recorded it as rejected).
  if (!detail::boundary_root_ok(sides)) {
    std::erase_if(out.roots, [&](const radius_solution& s) {
      return std::abs(s.r - rmin) <= tol.dedupe_rel * rmin;
    });
  }
  detail::sort_and_dedupe(out, tol.dedupe_rel);
  return out;
}

/// Scan the all-plus equation sum alpha_k = 2 pi E for every attainable E,
/// plus the PNCI balance equation. Returns every root tagged by branch and E.
inline root_set all_positive_roots(const side_list& sides, const tolerances& tol = {}) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double rmin = sides.max_length() / 2.0;
  const double s_max = detail::angle_sum(sides, rmin);
  const classification cls = classify_a_priori(sides, tol.classify_angle);

  root_set out;
  // S(r) is strictly decreasing from s_max to 0: exactly one root per E with
  // 2 pi E <= s_max.
  const int e_hi = static_cast<int>(std::floor(s_max / two_pi + 1e-9));
  for (int e = 1; e <= e_hi; ++e) {
    const double target = two_pi * e;
    auto f = [&](double r) { return detail::angle_sum(sides, r) - target; };
    auto df = [&](double r) { return detail::angle_sum_derivative(sides, r); };
    double flo = s_max - target;
    if (std::abs(flo) <= tol.angle_residual) {
      if (detail::boundary_root_ok(sides)) {
        out.roots.push_back(detail::make_solution(
            sides, rmin, cls, branch_kind::convex_pci, e, std::nullopt, flo));
      } else {
        out.rejected.push_back({rmin, "degenerate boundary root: multiple diameter chords"});
      }
      continue;
    }
    if (flo < 0) continue;  // slack from the floor guard; no root for this E
    double hi = std::max(sides.max_length(), sides.perimeter() / 2.0);
    double fhi = f(hi);
    int doublings = 0;
    while (fhi > 0) {
      if (++doublings > detail::max_bracket_doublings)
        raise(errc::no_convergence, "bracket expansion failed in positive-root scan");
      hi *= 2;
      fhi = f(hi);
    }
    double r = detail::polish_root(f, df, rmin, hi, flo, fhi);
    out.roots.push_back(
        detail::make_solution(sides, r, cls, branch_kind::convex_pci, e, std::nullopt, f(r)));
  }

  // The PNCI balance equation has a root iff the polygon is PNCI.
  if (cls.kind == polygon_class::pnci) {
    radius_solution pnci = solve_radius_convex(sides, tol);
    out.roots.push_back(std::move(pnci));
  }

  detail::sort_and_dedupe(out, tol.dedupe_rel);
  return out;
}

/// Perimeter filter: the circumscribed circle must be longer than the
/// inscribed polygon, so keep roots with 2 pi r strictly greater than the
/// perimeter and return the largest. The count of qualifying roots is
/// reported rather than assumed to be one.
inline convex_selection select_convex_root(const root_set& set, double perimeter) {
  const double two_pi = 2.0 * std::numbers::pi;
  convex_selection sel;
  for (const auto& sol : set.roots) {
    if (two_pi * sol.r > perimeter) {
      if (sel.qualifying == 0) sel.root = sol;  // roots are sorted descending
      ++sel.qualifying;
    }
  }
  if (sel.qualifying == 0)
    raise(errc::no_qualifying_root, "no root exceeds perimeter / 2 pi");
  return sel;
}

}  // namespace cyclorad
