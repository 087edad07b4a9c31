#pragma once

// Exact rational scalars and dense univariate polynomials over them.
// Just enough arithmetic for the radical elimination and the Chebyshev
// factorizations: add/sub/mul, exact division, perfect-square root,
// content extraction and evaluation.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclorad/errors.hpp"

namespace cyclorad {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Parse a decimal or fractional token ("3", "-2.5", "7/2") exactly.
inline rational rational_from_string(const std::string& s) {
  if (s.empty()) raise(errc::parse_error, "empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      bigint num(s.substr(0, slash));
      bigint den(s.substr(slash + 1));
      if (den == 0) raise(errc::parse_error, "zero denominator in " + s);
      return rational(num, den);
    } catch (const std::exception&) {
      raise(errc::parse_error, "bad rational token: " + s);
    }
  }
  std::string t = s;
  bool neg = false;
  if (t[0] == '+' || t[0] == '-') {
    neg = (t[0] == '-');
    t.erase(0, 1);
  }
  auto dot = t.find('.');
  std::string digits = t;
  std::size_t frac_len = 0;
  if (dot != std::string::npos) {
    frac_len = t.size() - dot - 1;
    digits = t.substr(0, dot) + t.substr(dot + 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    raise(errc::parse_error, "bad number token: " + s);
  bigint num(digits);
  bigint den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  if (neg) num = -num;
  return rational(num, den);
}

inline std::string rational_to_string(const rational& q) {
  const bigint num = boost::multiprecision::numerator(q);
  const bigint den = boost::multiprecision::denominator(q);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

/// Dense polynomial with rational coefficients, ascending powers.
class rpoly {
 public:
  rpoly() = default;
  explicit rpoly(rational c) : c_{std::move(c)} { trim(); }
  explicit rpoly(std::vector<rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static rpoly variable() { return rpoly(std::vector<rational>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<rational>& coeffs() const { return c_; }
  const rational& operator[](std::size_t i) const { return c_[i]; }
  rational leading() const { return c_.empty() ? rational(0) : c_.back(); }

  friend rpoly operator+(const rpoly& a, const rpoly& b) {
    std::vector<rational> r(std::max(a.c_.size(), b.c_.size()), rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return rpoly(std::move(r));
  }

  friend rpoly operator-(const rpoly& a, const rpoly& b) {
    std::vector<rational> r(std::max(a.c_.size(), b.c_.size()), rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return rpoly(std::move(r));
  }

  friend rpoly operator*(const rpoly& a, const rpoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<rational> r(a.c_.size() + b.c_.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return rpoly(std::move(r));
  }

  friend rpoly operator*(const rational& s, const rpoly& p) {
    if (s == 0) return {};
    std::vector<rational> r = p.c_;
    for (auto& c : r) c *= s;
    return rpoly(std::move(r));
  }

  rpoly& operator+=(const rpoly& o) { return *this = *this + o; }
  rpoly& operator-=(const rpoly& o) { return *this = *this - o; }
  rpoly& operator*=(const rpoly& o) { return *this = *this * o; }

  bool operator==(const rpoly& o) const { return c_ == o.c_; }

  rational eval(const rational& x) const {
    rational v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  /// Quotient of an exact division; throws if the division leaves a remainder.
  rpoly divide_exact(const rpoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("rpoly: division by zero");
    std::vector<rational> rem = c_;
    if (rem.size() < d.c_.size()) {
      if (is_zero()) return {};
      throw std::invalid_argument("rpoly: inexact division (degree)");
    }
    std::vector<rational> q(rem.size() - d.c_.size() + 1, rational(0));
    for (std::size_t i = q.size(); i-- > 0;) {
      rational f = rem[i + d.c_.size() - 1] / d.c_.back();
      q[i] = f;
      if (f != 0)
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= f * d.c_[j];
    }
    for (const auto& c : rem)
      if (c != 0) throw std::invalid_argument("rpoly: inexact division (remainder)");
    return rpoly(std::move(q));
  }

  /// Exact square root of a perfect-square polynomial.
  rpoly sqrt_exact() const {
    if (is_zero()) return {};
    if (degree() % 2 != 0) throw std::invalid_argument("rpoly: odd-degree sqrt");
    const std::size_t m = static_cast<std::size_t>(degree()) / 2;
    std::vector<rational> q(m + 1, rational(0));
    q[m] = sqrt_rational(leading());
    // Match coefficients from the top: the x^{i+m} coefficient of q*q is
    // 2 q_i q_m plus pairs q_j q_k with j,k in (i, m).
    for (std::size_t i = m; i-- > 0;) {
      rational s = 0;
      for (std::size_t j = i + 1; j <= m; ++j) {
        std::size_t k = i + m - j;
        if (k > m || k <= i || j > k) continue;
        s += (j == k) ? rational(q[j] * q[k]) : rational(2 * q[j] * q[k]);
      }
      q[i] = (c_[i + m] - s) / (2 * q[m]);
    }
    rpoly root{std::vector<rational>(q)};
    if (!(root * root == *this))
      throw std::invalid_argument("rpoly: not a perfect square");
    return root;
  }

  /// Positive rational content such that (1/content) * poly is a primitive
  /// integer polynomial.
  rational content() const {
    bigint g = 0, l = 1;
    for (const auto& c : c_) {
      g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c) < 0
                                            ? bigint(-boost::multiprecision::numerator(c))
                                            : boost::multiprecision::numerator(c));
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    }
    if (g == 0) return 1;
    return rational(g, l);
  }

 private:
  static rational sqrt_rational(const rational& q) {
    if (q < 0) throw std::invalid_argument("rpoly: sqrt of negative leading coefficient");
    bigint n = boost::multiprecision::numerator(q);
    bigint d = boost::multiprecision::denominator(q);
    bigint sn = boost::multiprecision::sqrt(n);
    bigint sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d)
      throw std::invalid_argument("rpoly: leading coefficient is not a perfect square");
    return rational(sn, sd);
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<rational> c_;
};

}  // namespace cyclorad
