#pragma once

// Side-list validation, central-angle/complex-factor primitives, the complex
// product residual, and the a-priori center classification.
//
// Everything here is a pure function of its arguments; lengths are
// unit-agnostic (only ratios l/r enter the trigonometry).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "cyclorad/errors.hpp"

namespace cyclorad {

struct tolerances {
  double angle_residual = 1e-10;  // acceptance band for angle-equation residuals
  double classify_angle = 1e-9;   // CenterOnSide band in classify_a_priori
  double criterion = 1e-9;        // equality band for the PCI/PNCI criteria
  double dedupe_rel = 1e-9;       // relative root deduplication
};

/// Ordered positive chord lengths of a cyclic polygon. Construction is via
/// validate_sides(); the input order is preserved.
class side_list {
 public:
  explicit side_list(std::vector<double> lengths) : lengths_(std::move(lengths)) {
    if (!lengths_.empty()) {
      auto it = std::max_element(lengths_.begin(), lengths_.end());
      max_index_ = static_cast<std::size_t>(it - lengths_.begin());
    }
  }

  std::size_t size() const { return lengths_.size(); }
  double operator[](std::size_t k) const { return lengths_[k]; }
  std::span<const double> lengths() const { return lengths_; }

  std::size_t max_index() const { return max_index_; }
  double max_length() const { return lengths_[max_index_]; }

  double perimeter() const {
    double p = 0;
    for (double l : lengths_) p += l;
    return p;
  }

  std::size_t count_at_max() const {
    std::size_t c = 0;
    for (double l : lengths_) c += (l == max_length());
    return c;
  }

 private:
  std::vector<double> lengths_;
  std::size_t max_index_ = 0;
};

inline side_list validate_sides(std::span<const double> raw) {
  if (raw.size() < 3)
    raise(errc::too_few_sides, "need at least 3 sides, got " + std::to_string(raw.size()));
  double sum = 0, max = 0;
  for (double l : raw) {
    if (!(l > 0) || !std::isfinite(l))
      raise(errc::non_positive_side, "side lengths must be positive finite reals");
    sum += l;
    max = std::max(max, l);
  }
  if (!(max < sum - max))
    raise(errc::degenerate_polygon,
          "longest side must be shorter than the sum of the others");
  return side_list(std::vector<double>(raw.begin(), raw.end()));
}

inline side_list validate_sides(std::initializer_list<double> raw) {
  return validate_sides(std::span<const double>(raw.begin(), raw.size()));
}

/// One factor of the unit-circle product: e^{i alpha} for the central angle
/// subtended by a chord of length l on a circle of radius r.
struct unit_complex {
  double re;
  double im;

  std::complex<double> value() const { return {re, im}; }
  double modulus() const { return std::hypot(re, im); }
};

namespace detail {

inline void require_chord(double l, double r) {
  if (!(l > 0)) raise(errc::non_positive_side, "chord length must be positive");
  if (l > 2 * r)
    raise(errc::chord_exceeds_diameter,
          "chord " + std::to_string(l) + " exceeds diameter " + std::to_string(2 * r));
}

// d(alpha)/dr for alpha = 2 asin(l / 2r). Unbounded as l -> 2r.
inline double central_angle_derivative(double l, double r) {
  const double disc = (2 * r - l) * (2 * r + l);
  return -2.0 * l / (r * std::sqrt(disc));
}

}  // namespace detail

/// Central angle alpha in (0, pi] subtended by chord l at radius r.
/// Evaluated as 2 asin(l/2r); equals arccos(1 - l^2/2r^2) but stays
/// well-conditioned for l << r.
inline double central_angle(double l, double r) {
  detail::require_chord(l, r);
  return 2.0 * std::asin(l / (2.0 * r));
}

/// The arccos form of the same angle (the law-of-cosines expression).
inline double central_angle_arccos(double l, double r) {
  detail::require_chord(l, r);
  const double c = 1.0 - l * l / (2.0 * r * r);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

/// e^{i alpha} built from half-angle identities so that |result| = 1
/// holds to rounding: re = 1 - 2s^2, im = 2s sqrt(1-s^2), s = l/2r.
inline unit_complex complex_factor(double l, double r) {
  detail::require_chord(l, r);
  const double s = l / (2.0 * r);
  const double c2 = 1.0 - s * s;
  return {1.0 - 2.0 * s * s, 2.0 * s * std::sqrt(std::max(c2, 0.0))};
}

/// Per-side traversal signs and winding count of a (possibly crossed) cyclic
/// traversal. sign -1 means the conjugate factor e^{-i alpha}.
struct signature {
  std::vector<int> signs;
  int winding = 1;

  static signature all_plus(std::size_t n, int winding = 1) {
    return {std::vector<int>(n, +1), winding};
  }
};

inline void validate_signature(const signature& sig, std::size_t n) {
  if (sig.signs.size() != n)
    raise(errc::parse_error, "signature has " + std::to_string(sig.signs.size()) +
                                 " signs for " + std::to_string(n) + " sides");
  std::size_t minus = 0;
  for (int s : sig.signs) {
    if (s != 1 && s != -1) raise(errc::parse_error, "signature signs must be +1 or -1");
    minus += (s == -1);
  }
  if (minus >= n)
    raise(errc::parse_error, "at least one sign must be +1");
  if (sig.winding < 1) raise(errc::parse_error, "winding must be a positive integer");
}

/// Product residual of the closure equation: prod_k factor_k^{sigma_k} - 1.
/// Zero (to tolerance) iff the signed central angles sum to a multiple of 2 pi.
inline std::complex<double> product_residual(const side_list& sides, const signature& sig,
                                             double r) {
  std::complex<double> prod(1.0, 0.0);
  for (std::size_t k = 0; k < sides.size(); ++k) {
    unit_complex f = complex_factor(sides[k], r);
    std::complex<double> z = f.value();
    prod *= (sig.signs[k] < 0) ? std::conj(z) : z;
  }
  return prod - 1.0;
}

inline std::complex<double> product_residual(const side_list& sides, double r) {
  return product_residual(sides, signature::all_plus(sides.size()), r);
}

enum class polygon_class { pci, pnci, center_on_side };

constexpr std::string_view polygon_class_name(polygon_class k) {
  switch (k) {
    case polygon_class::pci: return "PCI";
    case polygon_class::pnci: return "PNCI";
    case polygon_class::center_on_side: return "CenterOnSide";
  }
  return "?";
}

struct classification {
  polygon_class kind;
  std::size_t longest_index;  // index of the longest side (first of ties)
};

/// Classify before solving: at r = l_max/2 the longest side subtends pi, the
/// rest sum to theta. theta > pi puts the circumcenter inside (PCI), theta < pi
/// outside the longest side (PNCI), theta = pi on the side itself.
inline classification classify_a_priori(const side_list& sides, double angle_tol = 1e-9) {
  const double lmax = sides.max_length();
  double theta = 0;
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (k == sides.max_index()) continue;
    theta += 2.0 * std::asin(sides[k] / lmax);
  }
  polygon_class kind;
  if (std::abs(theta - std::numbers::pi) <= angle_tol)
    kind = polygon_class::center_on_side;
  else if (theta > std::numbers::pi)
    kind = polygon_class::pci;
  else
    kind = polygon_class::pnci;
  return {kind, sides.max_index()};
}

}  // namespace cyclorad
