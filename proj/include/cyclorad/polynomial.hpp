#pragma once

// Exact-arithmetic reproduction of the symbolic workflow: expand the complex
// product into a multilinear form in the sine radicals, eliminate the
// radicals by iterated isolate-and-square, and emit integer radius
// polynomials. Regular polygons shortcut through the Chebyshev recurrence
// T_n(c) = 1 with c = 1 - l^2/(2 r^2), factored into the cos(2 pi/d) divisor
// polynomials.
//
// Everything is expressed in w = 1/(2 r^2):
//   c_k = 1 - l_k^2 w,   s_k^2 = 1 - c_k^2 = l_k^2 w (2 - l_k^2 w),
// so all coefficients live in Q[w] until the final conversion to ascending
// powers of r^2.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cyclorad/errors.hpp"
#include "cyclorad/exact.hpp"

namespace cyclorad {

/// Exact univariate polynomial in r^2 (ascending). After normalize() the
/// coefficients are coprime integers with a positive constant term.
struct radius_polynomial {
  std::vector<rational> coefficients;  // ascending powers of r^2
  std::string scale_note;

  int degree_r2() const { return static_cast<int>(coefficients.size()) - 1; }

  /// Exact value at radius r given as a rational.
  rational eval_exact(const rational& r) const {
    const rational x = r * r;
    rational v = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) v = v * x + coefficients[i];
    return v;
  }

  /// |p(r)| / sum |a_j| r^{2j}: scale-free residual, exact until the final
  /// division.
  double relative_residual(double r) const;
};

/// Multilinear form sum_S poly_S(w) * prod_{k in S} s_k, keyed by the subset
/// bitmask of which sine radicals appear.
struct multilinear_form {
  std::map<std::uint32_t, rpoly> terms;
  std::vector<rational> sides;  // needed for s^2 -> polynomial substitution

  std::size_t side_count() const { return sides.size(); }
};

namespace poly_detail {

inline rpoly cosine_poly(const rational& l) {
  // c = 1 - l^2 w
  return rpoly(std::vector<rational>{1, -l * l});
}

inline rpoly sine_square_poly(const rational& l) {
  // s^2 = l^2 w (2 - l^2 w)
  const rational l2 = l * l;
  return rpoly(std::vector<rational>{0, 2 * l2, -l2 * l2});
}

// Product of two multilinear forms; shared radicals collapse through s^2.
inline multilinear_form multiply(const multilinear_form& a, const multilinear_form& b) {
  multilinear_form out;
  out.sides = a.sides;
  for (const auto& [ma, pa] : a.terms) {
    for (const auto& [mb, pb] : b.terms) {
      rpoly coeff = pa * pb;
      std::uint32_t common = ma & mb;
      for (std::uint32_t k = 0; common != 0; ++k, common >>= 1)
        if (common & 1u) coeff *= sine_square_poly(a.sides[k]);
      std::uint32_t mask = ma ^ mb;
      auto it = out.terms.find(mask);
      if (it == out.terms.end())
        out.terms.emplace(mask, std::move(coeff));
      else
        it->second += coeff;
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// w-polynomial (degree D) times (2 r^2)^D, written ascending in r^2.
inline std::vector<rational> w_poly_to_r2(const rpoly& p) {
  if (p.is_zero()) return {};
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<rational> out(d + 1, rational(0));
  rational pow2 = 1;
  for (std::size_t t = 0; t <= d; ++t) {
    out[t] = p[d - t] * pow2;
    pow2 *= 2;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline void normalize(radius_polynomial& poly) {
  rpoly p{std::vector<rational>(poly.coefficients)};
  if (p.is_zero()) return;
  std::vector<rational> out(p.coeffs());
  if (p.degree() > 0) {
    rational c = p.content();
    for (auto& q : out) q /= c;
  }
  // sign convention: positive constant term (matching the printed forms),
  // else positive leading coefficient
  rational sign_ref = out.front() != 0 ? out.front() : out.back();
  if (sign_ref < 0)
    for (auto& q : out) q = -q;
  poly.coefficients = std::move(out);
}

}  // namespace poly_detail

inline double radius_polynomial::relative_residual(double r) const {
  if (coefficients.empty()) return 0;
  const rational rq(r);
  const rational x = rq * rq;
  rational value = 0, scale = 0, px = 1;
  for (const auto& a : coefficients) {
    value += a * px;
    scale += (a < 0 ? -a : a) * px;
    px *= x;
  }
  if (scale == 0) return 0;
  rational ratio = (value < 0 ? -value : value) / scale;
  return ratio.convert_to<double>();
}

/// Expand 1 - prod_k (c_k + i s_k) into real and imaginary multilinear forms
/// (even / odd total s-degree).
inline std::pair<multilinear_form, multilinear_form> expand_product(
    const std::vector<rational>& sides) {
  const std::size_t n = sides.size();
  if (n < 2) raise(errc::too_few_sides, "product expansion needs at least 2 factors");
  if (n > 20) raise(errc::degree_overflow, "product expansion limited to 20 factors");
  for (const auto& l : sides)
    if (l <= 0) raise(errc::non_positive_side, "sides must be positive rationals");

  multilinear_form real, imag;
  real.sides = imag.sides = sides;

  const std::uint32_t total = 1u << n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    rpoly coeff(rational(1));
    int bits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1u << k))
        ++bits;
      else
        coeff *= poly_detail::cosine_poly(sides[k]);
    }
    // i^bits, negated by the leading "1 -".
    switch (bits % 4) {
      case 0: real.terms[mask] = rational(-1) * coeff; break;
      case 1: imag.terms[mask] = rational(-1) * coeff; break;
      case 2: real.terms[mask] = coeff; break;
      case 3: imag.terms[mask] = coeff; break;
    }
  }
  real.terms[0] += rpoly(rational(1));  // the "1 -" constant
  std::erase_if(real.terms, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(imag.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return {std::move(real), std::move(imag)};
}

/// Eliminate the sine radicals from the real-part form by repeatedly
/// isolating the highest-index radical and squaring, then clear the
/// 1/(2 r^2) denominators. Squaring only adds roots, so every radius
/// satisfying the product equation remains a root of the output.
inline radius_polynomial eliminate_radicals(const multilinear_form& form) {
  const std::size_t n = form.side_count();
  if (n > 6)
    raise(errc::degree_overflow,
          "radical elimination guarded at n <= 6 (degree doubles per squaring); "
          "use the numeric solver for larger n");

  // Equal sides carry the same radical (both sines are taken positive), so
  // group by value first: pairs fold through s^2 and the iterated squaring
  // never faces two formally distinct copies of one algebraic quantity
  // (which would square the form to zero, e.g. for the unit square).
  std::vector<rational> values;
  for (const auto& l : form.sides)
    if (std::find(values.begin(), values.end(), l) == values.end()) values.push_back(l);

  multilinear_form work;
  work.sides = values;
  for (const auto& [mask, poly] : form.terms) {
    rpoly coeff = poly;
    std::uint32_t vmask = 0;
    for (std::size_t v = 0; v < values.size(); ++v) {
      int count = 0;
      for (std::size_t k = 0; k < n; ++k)
        if ((mask & (1u << k)) && form.sides[k] == values[v]) ++count;
      for (int pair = 0; pair < count / 2; ++pair)
        coeff *= poly_detail::sine_square_poly(values[v]);
      if (count % 2) vmask |= (1u << v);
    }
    auto it = work.terms.find(vmask);
    if (it == work.terms.end())
      work.terms.emplace(vmask, std::move(coeff));
    else
      it->second += coeff;
  }
  std::erase_if(work.terms, [](const auto& kv) { return kv.second.is_zero(); });
  const std::size_t m = values.size();
  for (;;) {
    int highest = -1;
    for (const auto& [mask, poly] : work.terms) {
      for (int k = static_cast<int>(m) - 1; k >= 0; --k)
        if (mask & (1u << k)) {
          highest = std::max(highest, k);
          break;
        }
    }
    if (highest < 0) break;

    const std::uint32_t bit = 1u << highest;
    multilinear_form p_part, q_part;
    p_part.sides = q_part.sides = work.sides;
    for (const auto& [mask, poly] : work.terms) {
      if (mask & bit)
        q_part.terms[mask & ~bit] = poly;
      else
        p_part.terms[mask] = poly;
    }
    // P + s Q = 0  ->  P^2 - s^2 Q^2 = 0
    multilinear_form p2 = poly_detail::multiply(p_part, p_part);
    multilinear_form q2 = poly_detail::multiply(q_part, q_part);
    const rpoly s2 = poly_detail::sine_square_poly(work.sides[highest]);
    multilinear_form next;
    next.sides = work.sides;
    next.terms = std::move(p2.terms);
    for (auto& [mask, poly] : q2.terms) {
      rpoly scaled = s2 * poly;
      auto it = next.terms.find(mask);
      if (it == next.terms.end())
        next.terms.emplace(mask, rational(-1) * scaled);
      else
        it->second -= scaled;
    }
    work = std::move(next);
    std::erase_if(work.terms, [](const auto& kv) { return kv.second.is_zero(); });
  }

  rpoly pure;
  if (auto it = work.terms.find(0); it != work.terms.end()) pure = it->second;
  radius_polynomial out;
  out.coefficients = poly_detail::w_poly_to_r2(pure);
  poly_detail::normalize(out);
  out.scale_note =
      "real part of 1 - prod(c_k + i s_k), radicals squared out, w = 1/(2 r^2) "
      "cleared by (2 r^2)^deg, divided by integer content";
  return out;
}

/// One factor of T_n(c) - 1: the integer polynomial whose roots are
/// cos(2 pi j / d) with gcd(j, d) = 1, mapped to ascending powers of r^2.
struct regular_factor {
  radius_polynomial poly;
  unsigned divisor = 1;  // d | n: roots close after d steps of 2 pi/d
  int multiplicity = 1;
};

struct regular_factorization {
  std::vector<regular_factor> factors;
  std::string scale_note;
};

namespace poly_detail {

inline rpoly chebyshev_t(unsigned n) {
  rpoly t0(rational(1));
  if (n == 0) return t0;
  rpoly t1 = rpoly::variable();
  if (n == 1) return t1;
  const rpoly two_x = rational(2) * rpoly::variable();
  for (unsigned k = 2; k <= n; ++k) {
    rpoly t2 = two_x * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

// Minimal-style integer polynomial with roots cos(2 pi j/d), gcd(j,d)=1:
// (c-1) for d=1, (c+1) for d=2, else extracted from T_d(c) - 1 =
// 2^[d even] (c-1) (c+1)^[d even] prod_{e|d, e>=3} psi_e(c)^2.
inline rpoly cos_divisor_poly(unsigned d, std::map<unsigned, rpoly>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  rpoly result;
  if (d == 1) {
    result = rpoly(std::vector<rational>{-1, 1});
  } else if (d == 2) {
    result = rpoly(std::vector<rational>{1, 1});
  } else {
    rpoly q = chebyshev_t(d) - rpoly(rational(1));
    q = q.divide_exact(cos_divisor_poly(1, memo));
    if (d % 2 == 0) {
      q = q.divide_exact(cos_divisor_poly(2, memo));
      q = rational(1, 2) * q;
    }
    for (unsigned e = 3; e < d; ++e) {
      if (d % e != 0) continue;
      rpoly psi = cos_divisor_poly(e, memo);
      q = q.divide_exact(psi * psi);
    }
    result = q.sqrt_exact();
  }
  memo.emplace(d, result);
  return result;
}

// Substitute c = 1 - l^2 w into a c-polynomial.
inline rpoly substitute_c(const rpoly& p, const rational& l) {
  const rpoly c = cosine_poly(l);
  rpoly out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) out = out * c + rpoly(p[i]);
  return out;
}

}  // namespace poly_detail

/// Product of the factors with their multiplicities: the full radius
/// polynomial up to a constant (infinite-radius roots drop out of each
/// factor's r^2 form).
inline radius_polynomial expanded_polynomial(const regular_factorization& fac) {
  rpoly prod(rational(1));
  for (const auto& f : fac.factors) {
    rpoly p{std::vector<rational>(f.poly.coefficients)};
    for (int m = 0; m < f.multiplicity; ++m) prod *= p;
  }
  radius_polynomial out;
  out.coefficients = prod.coeffs();
  poly_detail::normalize(out);
  out.scale_note = "product of the divisor factors with multiplicities";
  return out;
}

/// Factor T_n(c) - 1 (the closure equation of the regular n-gon with side l)
/// into its cos(2 pi/d) divisor polynomials, each converted to an integer
/// polynomial in r^2. Divisor d contributes the {n/q} radii with q = j n/d.
inline regular_factorization regular_polynomial(unsigned n, const rational& l) {
  if (n < 3) raise(errc::too_few_sides, "regular polygon needs n >= 3");
  if (l <= 0) raise(errc::non_positive_side, "side length must be positive");

  std::map<unsigned, rpoly> memo;
  regular_factorization out;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    rpoly psi = poly_detail::cos_divisor_poly(d, memo);
    rpoly in_w = poly_detail::substitute_c(psi, l);
    regular_factor f;
    f.divisor = d;
    f.multiplicity = (d <= 2) ? 1 : 2;
    f.poly.coefficients = poly_detail::w_poly_to_r2(in_w);
    poly_detail::normalize(f.poly);
    f.poly.scale_note = "cos(2 pi/" + std::to_string(d) +
                        ") divisor of T_" + std::to_string(n) +
                        "(c) - 1, c = 1 - l^2/(2 r^2), l = " + rational_to_string(l);
    out.factors.push_back(std::move(f));
  }
  out.scale_note =
      "T_n(c) - 1 = 2^[n even] * prod_d factor_d^multiplicity up to the content "
      "absorbed per factor";
  return out;
}

}  // namespace cyclorad
