#include "qgrass/kernel.hpp"

namespace qgr {

namespace {

struct Elim {
  std::vector<std::vector<Laurent>> w;              // row-major working copy
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (col, row), in column order
  Laurent d = Laurent(1);                           // last pivot
  std::vector<char> is_pivot_row;
};

Laurent must_div(const Laurent& a, const Laurent& b) {
  auto q = div_exact(a, b);
  if (!q) fail(Err::Internal, "fraction-free elimination produced an inexact division");
  return *q;
}

// Bareiss-Jordan: at each pivot step every other row r is replaced by
// (piv * r - r[pivcol] * pivrow) / prev_piv, divisions exact by Sylvester's
// identity. Afterwards every pivot entry equals the final pivot d, pivot
// columns are zero elsewhere, and non-pivot rows are zero in eliminable
// columns.
Elim eliminate(std::vector<std::vector<Laurent>> w, std::size_t pivot_cols) {
  Elim e;
  std::size_t rows = w.size();
  e.is_pivot_row.assign(rows, 0);
  // scale rows into Z[t] so intermediate exponents stay small
  for (auto& row : w) {
    long me = 0;
    bool nonzero = false;
    for (const auto& x : row)
      if (!x.is_zero()) {
        long v = x.min_exp();
        me = nonzero ? std::min(me, v) : v;
        nonzero = true;
      }
    if (nonzero && me != 0)
      for (auto& x : row) x = x * Laurent::term(1, -me);
  }
  Laurent prev(1);
  for (std::size_t col = 0; col < pivot_cols; ++col) {
    std::size_t pr = rows;
    for (std::size_t r = 0; r < rows; ++r)
      if (!e.is_pivot_row[r] && !w[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr == rows) continue;  // free column
    e.is_pivot_row[pr] = 1;
    e.pivots.emplace_back(col, pr);
    const Laurent piv = w[pr][col];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      if (w[r][col].is_zero()) {
        for (auto& x : w[r])
          if (!x.is_zero()) x = must_div(piv * x, prev);
        continue;
      }
      const Laurent f = w[r][col];
      for (std::size_t c = 0; c < w[r].size(); ++c) {
        Laurent t = piv * w[r][c] - f * w[pr][c];
        w[r][c] = t.is_zero() ? Laurent() : must_div(t, prev);
      }
    }
    prev = piv;
  }
  e.d = prev;
  e.w = std::move(w);
  return e;
}

std::vector<std::vector<Laurent>> to_rows(const ScalarMatrix& m) {
  std::vector<std::vector<Laurent>> w(m.rows, std::vector<Laurent>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) w[r][c] = m.at(r, c);
  return w;
}

}  // namespace

void canonicalize_vector(std::vector<Laurent>& v) {
  Int g = 0;
  long me = 0;
  bool nonzero = false;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = boost::multiprecision::gcd(g, int_content(x));
    me = nonzero ? std::min(me, x.min_exp()) : x.min_exp();
    nonzero = true;
  }
  if (!nonzero) return;
  if (g < 0) g = -g;
  for (auto& x : v) {
    Laurent r;
    for (const auto& [e, c] : x.terms()) r += Laurent::term(c / g, e - me);
    x = r;
  }
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x.coeff(x.min_exp()) < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

std::vector<std::vector<Laurent>> kernel_basis(const ScalarMatrix& m) {
  Elim e = eliminate(to_rows(m), m.cols);
  std::vector<char> pivot_col(m.cols, 0);
  for (auto [c, r] : e.pivots) pivot_col[c] = 1;
  std::vector<std::vector<Laurent>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (pivot_col[f]) continue;
    std::vector<Laurent> v(m.cols);
    v[f] = e.d;
    for (auto [c, r] : e.pivots) v[c] = -e.w[r][f];
    canonicalize_vector(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ScalarMatrix& m) {
  return eliminate(to_rows(m), m.cols).pivots.size();
}

bool in_row_span(const ScalarMatrix& m, const std::vector<Laurent>& v) {
  if (v.size() != m.cols) fail(Err::LengthMismatch, "span test dimension mismatch");
  ScalarMatrix ext(m.rows + 1, m.cols);
  ext.a = m.a;
  ext.a.insert(ext.a.end(), v.begin(), v.end());
  return rank(ext) == rank(m);
}

std::optional<FfSolution> solve_fraction_free(const ScalarMatrix& a, const std::vector<Laurent>& rhs) {
  if (rhs.size() != a.rows) fail(Err::LengthMismatch, "solve dimension mismatch");
  auto w = to_rows(a);
  for (std::size_t r = 0; r < a.rows; ++r) w[r].push_back(rhs[r]);
  Elim e = eliminate(std::move(w), a.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    if (!e.is_pivot_row[r] && !e.w[r][a.cols].is_zero()) return std::nullopt;
  FfSolution s;
  s.num.assign(a.cols, Laurent());
  s.den = e.d;
  for (auto [c, r] : e.pivots) s.num[c] = e.w[r][a.cols];
  return s;
}

}  // namespace qgr
