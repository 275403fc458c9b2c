#include "qgrass/expr.hpp"

#include <cctype>
#include <charconv>

namespace qgr {

namespace {

struct Parser {
  const std::string& s;
  int m, n;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void bad(const std::string& what) {
    fail(Err::ParseError, what + " at position " + std::to_string(i));
  }

  long integer() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) bad("expected an integer");
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, v);
    if (ec != std::errc() || ptr != s.data() + i) bad("integer out of range");
    return v;
  }

  NCPoly minor() {
    std::vector<int> cols;
    cols.push_back(int(integer()));
    while (eat(',')) cols.push_back(int(integer()));
    if (!eat(']')) bad("expected ']' in a minor literal");
    if (int(cols.size()) != m)
      bad("a minor literal lists exactly " + std::to_string(m) + " columns here");
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] < 1 || cols[k] > n) bad("minor column outside 1.." + std::to_string(n));
      if (k > 0 && cols[k] <= cols[k - 1]) bad("minor columns must strictly increase");
    }
    return maximal_minor(m, n, make_index_set(n, std::move(cols)));
  }

  bool scalar_part(const NCPoly& a, Laurent& out) {
    if (a.is_zero()) {
      out = Laurent();
      return true;
    }
    if (a.terms().size() == 1 && a.terms().begin()->first.empty()) {
      out = a.terms().begin()->second;
      return true;
    }
    return false;
  }

  NCPoly power(const NCPoly& base, long e) {
    if (e >= 0) {
      NCPoly r = NCPoly::one(m, n);
      for (long k = 0; k < e; ++k) r = nc_mul(r, base);
      return r;
    }
    Laurent c;
    if (!scalar_part(base, c)) fail(Err::NotAUnit, "negative power of a non-scalar");
    if (c.is_zero()) fail(Err::ZeroDivisor, "negative power of zero");
    if (!c.is_monomial()) fail(Err::NotAUnit, "negative power of a non-monomial scalar");
    long ex = c.min_exp();
    Int co = c.coeff(ex);
    if (co != 1 && co != -1) fail(Err::NotAUnit, "negative power of a non-unit scalar");
    Laurent inv = Laurent::term(co, -ex);
    Laurent r(1);
    for (long k = 0; k < -e; ++k) r = r * inv;
    return NCPoly::scalar(m, n, r);
  }

  NCPoly atom() {
    skip();
    if (i >= s.size()) bad("unexpected end of input");
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return NCPoly::scalar(m, n, Laurent(integer()));
    if (c == 'q') {
      ++i;
      return NCPoly::scalar(m, n, q_power(1, m));
    }
    if (c == 'p') {
      ++i;
      return NCPoly::scalar(m, n, p_power(1));
    }
    if (c == 't') {
      ++i;
      return NCPoly::scalar(m, n, Laurent::term(1, 1));
    }
    if (c == '(') {
      ++i;
      NCPoly e = expression();
      if (!eat(')')) bad("expected ')'");
      return e;
    }
    if (c == '[') {
      ++i;
      return minor();
    }
    bad(std::string("unexpected character '") + c + "'");
  }

  NCPoly factor() {
    int sign = 1;
    while (true) {
      char c = peek();
      if (c == '-') {
        sign = -sign;
        ++i;
      } else if (c == '+') {
        ++i;
      } else {
        break;
      }
    }
    NCPoly base = atom();
    if (peek() == '^') {
      ++i;
      long e = eat('-') ? -integer() : integer();
      base = power(base, e);
    }
    return sign < 0 ? nc_scale(Laurent(-1), base) : base;
  }

  NCPoly term() {
    NCPoly v = factor();
    while (peek() == '*') {
      ++i;
      v = nc_mul(v, factor());
    }
    return v;
  }

  NCPoly expression() {
    NCPoly v = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i;
        v = nc_add(v, term());
      } else if (c == '-') {
        ++i;
        v = nc_sub(v, term());
      } else {
        return v;
      }
    }
  }
};

}  // namespace

NCPoly eval_expression(const std::string& text, int m, int n) {
  if (m < 1 || m >= n) fail(Err::InvalidConfig, "need 1 <= m < n");
  Parser p{text, m, n};
  NCPoly v = p.expression();
  p.skip();
  if (p.i != text.size()) p.bad("trailing input");
  return v;
}

}  // namespace qgr
