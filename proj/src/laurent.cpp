#include "qgrass/laurent.hpp"

#include <sstream>

namespace qgr {

long Laurent::min_exp() const {
  if (terms_.empty()) fail(Err::ZeroElement, "min_exp of zero");
  return terms_.begin()->first;
}

long Laurent::max_exp() const {
  if (terms_.empty()) fail(Err::ZeroElement, "max_exp of zero");
  return terms_.rbegin()->first;
}

Int Laurent::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      long e = ea + eb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent operator-(const Laurent& a) {
  Laurent r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent q_power(long k, int m) {
  if (m < 1) fail(Err::InvalidConfig, "row count must be positive");
  return Laurent::term(1, k * m);
}

Laurent p_power(long k) { return Laurent::term(1, 2 * k); }

Laurent pow(const Laurent& a, long k) {
  if (k == 0) return Laurent(1);
  if (k < 0) {
    if (!a.is_monomial()) fail(Err::NotAUnit, "negative power of a non-monomial");
    const auto& [e, c] = *a.terms().begin();
    if (c != 1 && c != -1) fail(Err::NotAUnit, "negative power of a non-unit coefficient");
    Int cc = (k % 2 == 0) ? Int(1) : c;
    return Laurent::term(cc, e * k);
  }
  Laurent base = a, r(1);
  long e = k;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

std::optional<Laurent> monomial_ratio(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) fail(Err::ZeroDivisor, "monomial_ratio by zero");
  if (a.is_zero()) return std::nullopt;
  long e = a.min_exp() - b.min_exp();
  Int ca = a.coeff(a.min_exp());
  Int cb = b.coeff(b.min_exp());
  if (ca % cb != 0) return std::nullopt;
  Laurent lambda = Laurent::term(ca / cb, e);
  if (a == lambda * b) return lambda;
  return std::nullopt;
}

std::optional<Laurent> div_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) fail(Err::ZeroDivisor, "division by zero");
  if (a.is_zero()) return Laurent();
  // Long division from the top; exact over Z[t, t^-1] iff every leading
  // integer division is exact and the remainder vanishes. When a = q*b the
  // quotient's exponents lie in [a.min - b.min, a.max - b.max], which bounds
  // the loop.
  Laurent r = a, q;
  const long eb = b.max_exp();
  const Int cb = b.coeff(eb);
  const long qmin = a.min_exp() - b.min_exp();
  while (!r.is_zero()) {
    long er = r.max_exp();
    if (er - eb < qmin) return std::nullopt;
    Int cr = r.coeff(er);
    if (cr % cb != 0) return std::nullopt;
    Laurent tq = Laurent::term(cr / cb, er - eb);
    q += tq;
    r -= tq * b;
  }
  return q;
}

Laurent rescale_q_exponents(const Laurent& a, int m_from, int m_to) {
  if (m_from < 1 || m_to < 1) fail(Err::InvalidConfig, "row counts must be positive");
  Laurent r;
  for (const auto& [e, c] : a.terms()) {
    if (e % m_from != 0)
      fail(Err::PrereqViolation, "scalar is not a polynomial in q = t^" + std::to_string(m_from));
    r += Laurent::term(c, (e / m_from) * m_to);
  }
  return r;
}

Int int_content(const Laurent& a) {
  Int g = 0;
  for (const auto& [e, c] : a.terms()) g = boost::multiprecision::gcd(g, c);
  if (g < 0) g = -g;
  return g;
}

std::string to_string(const Laurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*t^" << e;
  }
  return os.str();
}

}  // namespace qgr
