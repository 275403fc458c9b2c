#pragma once

/**
 * @file laurent.hpp
 * @brief Exact scalars: integer-coefficient Laurent polynomials in one variable t.
 *
 * Every algebra in this library with m rows uses the deformation parameter
 * q = t^m, and the twisting parameter is p = t^2, so p^m = q^2 holds
 * identically. In particular q is transcendental over the integers and never
 * behaves like a root of unity.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

#include "qgrass/error.hpp"

namespace qgr {

using Int = boost::multiprecision::cpp_int;

class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) {
    if (c != 0) terms_[0] = c;
  }
  Laurent(Int c) {
    if (c != 0) terms_[0] = std::move(c);
  }

  /// c * t^e
  static Laurent term(Int c, long e) {
    Laurent r;
    if (c != 0) r.terms_[e] = std::move(c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }
  bool is_monomial() const { return terms_.size() == 1; }

  /// exponent -> nonzero coefficient, ascending exponent
  const std::map<long, Int>& terms() const { return terms_; }

  long min_exp() const;
  long max_exp() const;
  Int coeff(long e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a);

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

 private:
  std::map<long, Int> terms_;
};

/// q^k in an m-row algebra, i.e. t^(k*m)
Laurent q_power(long k, int m);

/// p^k, i.e. t^(2*k)
Laurent p_power(long k);

/// a^k. Negative k requires a to be a unit (a single term with coefficient +-1).
Laurent pow(const Laurent& a, long k);

/// The single-term lambda with a = lambda * b, if one exists. b must be nonzero.
std::optional<Laurent> monomial_ratio(const Laurent& a, const Laurent& b);

/// a / b when b divides a exactly; nullopt otherwise. b must be nonzero.
std::optional<Laurent> div_exact(const Laurent& a, const Laurent& b);

/// If a is exactly c * t^(k*m_from) summed over terms, rewrite each exponent
/// k*m_from as k*m_to. This is how a power-of-q scalar is carried from an
/// m_from-row algebra into an m_to-row one. Fails when some exponent is not a
/// multiple of m_from.
Laurent rescale_q_exponents(const Laurent& a, int m_from, int m_to);

/// gcd of the integer coefficients (positive; 0 for the zero scalar)
Int int_content(const Laurent& a);

/// textual form, ascending exponents: "-1*t^-2 + 3*t^0 + 1*t^4"; zero is "0"
std::string to_string(const Laurent& a);

}  // namespace qgr
