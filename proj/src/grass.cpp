#include "qgrass/grass.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qgr {

namespace {

NCPoly nc_pow(const NCPoly& a, int k) {
  NCPoly r = NCPoly::one(a.m(), a.n());
  for (int i = 0; i < k; ++i) r = nc_mul(r, a);
  return r;
}

Localized make_raw(int m, int n, int alpha, int k, NCPoly numer) {
  return Localized{m, n, alpha, k, std::move(numer)};
}

void check_compatible(const Localized& a, const Localized& b) {
  if (a.m != b.m || a.n != b.n)
    fail(Err::AmbientMismatch, "localized operands live in different Grassmannians");
  if (a.alpha != b.alpha) fail(Err::CenterMismatch, "localized operands have different centers");
}

}  // namespace

std::vector<IndexSet> all_m_subsets(int m, int n) {
  std::vector<IndexSet> out;
  if (m < 0 || m > n) return out;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(IndexSet{n, idx});
    int i = m - 1;
    while (i >= 0 && idx[i] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::optional<Laurent> nc_monomial_ratio(const NCPoly& a, const NCPoly& b) {
  if (b.is_zero()) fail(Err::ZeroDivisor, "ratio against the zero element");
  if (a.is_zero()) return std::nullopt;
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  std::optional<Laurent> lambda;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (!lambda) {
      lambda = monomial_ratio(ia->second, ib->second);
      if (!lambda) return std::nullopt;
    } else if (ia->second != *lambda * ib->second) {
      return std::nullopt;
    }
  }
  return lambda;
}

std::optional<int> try_quasi_exponent(const NCPoly& u, const NCPoly& v) {
  if (u.is_zero() || v.is_zero()) fail(Err::ZeroElement, "quasi-commutation with zero");
  NCPoly a = nc_mul(u, v);
  NCPoly b = nc_mul(v, u);
  auto lambda = nc_monomial_ratio(a, b);
  if (!lambda) return std::nullopt;
  if (!lambda->is_monomial()) return std::nullopt;
  long e = lambda->min_exp();
  if (lambda->coeff(e) != 1 || e % u.m() != 0) return std::nullopt;
  return int(e / u.m());
}

int quasi_exponent(const NCPoly& u, const NCPoly& v) {
  auto c = try_quasi_exponent(u, v);
  if (!c) fail(Err::NotQuasiCommuting, "u*v is not a power of q times v*u");
  return *c;
}

Report verify_consecutive_normality(int m, int n) {
  Report rep;
  auto subsets = all_m_subsets(m, n);
  for (int alpha = 1; alpha <= n; ++alpha) {
    NCPoly d = consecutive_minor(alpha, m, n);
    IndexSet dset = consecutive_set(alpha, m, n);
    for (const auto& j : subsets) {
      auto c = try_quasi_exponent(d, maximal_minor(m, n, j));
      rep.add("normality " + to_string(dset) + " vs " + to_string(j),
              c.has_value(), c ? "q^" + std::to_string(*c) : "no quasi-commutation scalar");
    }
  }
  return rep;
}

NCPoly eval_relation(const QuadraticRelation& r) {
  NCPoly acc = NCPoly::zero(r.m, r.n);
  for (const auto& t : r.terms)
    acc = nc_add(acc, nc_scale(t.coeff, nc_mul(maximal_minor(r.m, r.n, t.left),
                                               maximal_minor(r.m, r.n, t.right))));
  return acc;
}

std::string to_string(const QuadraticRelation& r) {
  if (r.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : r.terms) {
    if (!first) os << " + ";
    first = false;
    std::string cs = to_string(t.coeff);
    if (t.coeff.terms().size() > 1) cs = "(" + cs + ")";
    os << cs << " * " << to_string(t.left) << to_string(t.right);
  }
  return os.str();
}

std::vector<QuadraticRelation> quadratic_relations(int m, int n) {
  if (m < 1 || m >= n) fail(Err::InvalidConfig, "need 1 <= m < n");
  auto minors = all_m_subsets(m, n);
  const std::size_t nm = minors.size();
  std::vector<NCPoly> mp(nm);
  std::vector<Content> mc(nm);
  for (std::size_t i = 0; i < nm; ++i) {
    mp[i] = maximal_minor(m, n, minors[i]);
    mc[i] = minor_content(minors[i]);
  }
  // group ordered pairs by total content; kernels cannot mix classes
  std::map<Content, std::vector<std::pair<std::size_t, std::size_t>>> classes;
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      Content c(n);
      for (int x = 0; x < n; ++x) c[x] = mc[i][x] + mc[j][x];
      classes[c].emplace_back(i, j);
    }
  std::vector<QuadraticRelation> out;
  for (const auto& [content, pairs] : classes) {
    std::vector<NCPoly> prods;
    prods.reserve(pairs.size());
    std::map<Word, std::size_t> wordrow;
    for (auto [i, j] : pairs) {
      prods.push_back(nc_mul(mp[i], mp[j]));
      for (const auto& [w, c] : prods.back().terms())
        wordrow.emplace(w, 0);
    }
    std::size_t r = 0;
    for (auto& [w, idx] : wordrow) idx = r++;
    ScalarMatrix mat(wordrow.size(), pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col)
      for (const auto& [w, c] : prods[col].terms()) mat.at(wordrow[w], col) = c;
    for (const auto& v : kernel_basis(mat)) {
      QuadraticRelation rel;
      rel.m = m;
      rel.n = n;
      for (std::size_t s = 0; s < v.size(); ++s)
        if (!v[s].is_zero())
          rel.terms.push_back({v[s], minors[pairs[s].first], minors[pairs[s].second]});
      if (!eval_relation(rel).is_zero())
        fail(Err::Internal, "kernel vector does not evaluate to zero: " + to_string(rel));
      out.push_back(std::move(rel));
    }
  }
  return out;
}

NCPoly nonautomorphism_witness() {
  auto mm = [](std::initializer_list<int> v) {
    return maximal_minor(2, 4, make_index_set(4, std::vector<int>(v)));
  };
  NCPoly w = nc_mul(mm({2, 3}), mm({1, 4}));
  w = nc_sub(w, nc_scale(q_power(1, 2), nc_mul(mm({2, 4}), mm({1, 3}))));
  w = nc_add(w, nc_scale(q_power(2, 2), nc_mul(mm({1, 2}), mm({3, 4}))));
  return w;
}

QuadraticRelation muir_extend(const QuadraticRelation& r, const IndexSet& p) {
  if (p.n < r.n) fail(Err::PrereqViolation, "target ambient is smaller than the relation's");
  for (const auto& t : r.terms)
    for (const auto* s : {&t.left, &t.right})
      for (int x : s->elems)
        if (!p.contains(x))
          fail(Err::PrereqViolation, "P must contain every index used by the relation");
  IndexSet pbar = complement(p);
  int m2 = r.m + int(pbar.size());
  QuadraticRelation out;
  out.m = m2;
  out.n = p.n;
  for (const auto& t : r.terms) {
    IndexSet l{p.n, t.left.elems}, rr{p.n, t.right.elems};
    out.terms.push_back({rescale_q_exponents(t.coeff, r.m, m2),
                         set_union_disjoint(l, pbar), set_union_disjoint(rr, pbar)});
  }
  if (!eval_relation(out).is_zero())
    fail(Err::Internal, "transported relation does not evaluate to zero: " + to_string(out));
  return out;
}

std::optional<NCPoly> try_right_divide(const NCPoly& u, const NCPoly& d) {
  if (d.is_zero()) fail(Err::ZeroDivisor, "division by the zero element");
  if (u.m() != d.m() || u.n() != d.n())
    fail(Err::AmbientMismatch, "division across different algebras");
  NCPoly v(u.m(), u.n());
  if (u.is_zero()) return v;
  const Word& wd = d.terms().rbegin()->first;
  NCPoly r = u;
  while (!r.is_zero()) {
    const Word& wr = r.terms().rbegin()->first;
    if (wr.size() < wd.size()) return std::nullopt;
    // multiset difference wr \ wd; both are sorted
    Word cand;
    std::size_t j = 0;
    for (std::size_t i = 0; i < wr.size(); ++i) {
      if (j < wd.size() && wr[i] == wd[j]) {
        ++j;
        continue;
      }
      if (j < wd.size() && wd[j] < wr[i]) return std::nullopt;
      cand.push_back(wr[i]);
    }
    if (j != wd.size()) return std::nullopt;
    NCPoly cp(u.m(), u.n());
    cp.accumulate(cand, Laurent(1));  // cand is sorted, hence normal
    NCPoly g = nc_mul(cp, d);
    auto it = g.terms().find(wr);
    if (it == g.terms().end()) return std::nullopt;
    auto lambda = div_exact(r.terms().rbegin()->second, it->second);
    if (!lambda) return std::nullopt;
    v = nc_add(v, nc_scale(*lambda, cp));
    r = nc_sub(r, nc_scale(*lambda, g));
    if (!r.is_zero() && !(r.terms().rbegin()->first < wr)) return std::nullopt;
  }
  return v;
}

Localized loc_make(NCPoly u, int k, int alpha) {
  if (k < 0) fail(Err::InvalidConfig, "denominator exponent must be nonnegative");
  const int m = u.m(), n = u.n();
  if (m < 1 || m >= n) fail(Err::InvalidConfig, "need 1 <= m < n");
  alpha = tilde(alpha, n);
  if (u.is_zero()) return make_raw(m, n, alpha, 0, std::move(u));
  if (k > 0) {
    NCPoly d = consecutive_minor(alpha, m, n);
    while (k > 0) {
      auto v = try_right_divide(u, d);
      if (!v) break;
      u = std::move(*v);
      --k;
      if (u.is_zero()) return make_raw(m, n, alpha, 0, std::move(u));
    }
  }
  return make_raw(m, n, alpha, k, std::move(u));
}

Localized loc_mul(const Localized& a, const Localized& b) {
  check_compatible(a, b);
  if (a.numer.is_zero() || b.numer.is_zero())
    return make_raw(a.m, a.n, a.alpha, 0, NCPoly::zero(a.m, a.n));
  NCPoly rhs = b.numer;
  if (a.k > 0) {
    NCPoly d = consecutive_minor(a.alpha, a.m, a.n);
    NCPoly shifted = NCPoly::zero(a.m, a.n);
    for (const auto& [c, part] : content_components(b.numer)) {
      int e = quasi_exponent(part, d);  // part * d = q^e * d * part
      shifted = nc_add(shifted, nc_scale(q_power(long(a.k) * e, a.m), part));
    }
    rhs = std::move(shifted);
  }
  return loc_make(nc_mul(a.numer, rhs), a.k + b.k, a.alpha);
}

Localized loc_add(const Localized& a, const Localized& b) {
  check_compatible(a, b);
  int k = std::max(a.k, b.k);
  NCPoly d = consecutive_minor(a.alpha, a.m, a.n);
  NCPoly na = a.k == k ? a.numer : nc_mul(a.numer, nc_pow(d, k - a.k));
  NCPoly nb = b.k == k ? b.numer : nc_mul(b.numer, nc_pow(d, k - b.k));
  return loc_make(nc_add(na, nb), k, a.alpha);
}

Localized loc_sub(const Localized& a, const Localized& b) {
  return loc_add(a, loc_scale(Laurent(-1), b));
}

Localized loc_scale(const Laurent& c, const Localized& a) {
  if (c.is_zero()) return make_raw(a.m, a.n, a.alpha, 0, NCPoly::zero(a.m, a.n));
  return make_raw(a.m, a.n, a.alpha, a.k, nc_scale(c, a.numer));
}

bool loc_is_zero(const Localized& a) { return a.numer.is_zero(); }

bool loc_eq(const Localized& a, const Localized& b) {
  check_compatible(a, b);
  if (a.k == b.k) return nc_eq(a.numer, b.numer);
  NCPoly d = consecutive_minor(a.alpha, a.m, a.n);
  int common = std::min(a.k, b.k);
  return nc_eq(nc_mul(a.numer, nc_pow(d, b.k - common)),
               nc_mul(b.numer, nc_pow(d, a.k - common)));
}

std::optional<Laurent> loc_monomial_ratio(const Localized& a, const Localized& b) {
  check_compatible(a, b);
  if (b.numer.is_zero()) fail(Err::ZeroDivisor, "ratio against zero");
  if (a.numer.is_zero()) return std::nullopt;
  if (a.k == b.k) return nc_monomial_ratio(a.numer, b.numer);
  NCPoly d = consecutive_minor(a.alpha, a.m, a.n);
  int common = std::min(a.k, b.k);
  return nc_monomial_ratio(nc_mul(a.numer, nc_pow(d, b.k - common)),
                           nc_mul(b.numer, nc_pow(d, a.k - common)));
}

std::string to_string(const Localized& a) {
  std::string num = to_string(a.numer);
  if (a.k == 0) return num;
  return "(" + num + ") * [M_" + std::to_string(a.alpha) + "]^-" + std::to_string(a.k);
}

std::optional<Content> loc_content(const Localized& a) {
  auto c = column_content(a.numer);
  if (!c) return std::nullopt;
  if (a.k != 0) {
    Content dc = minor_content(consecutive_set(a.alpha, a.m, a.n));
    for (int x = 0; x < a.n; ++x) (*c)[x] -= long(a.k) * dc[x];
  }
  return c;
}

std::map<Content, Localized> loc_content_components(const Localized& a) {
  Content dc = minor_content(consecutive_set(a.alpha, a.m, a.n));
  std::map<Content, Localized> out;
  for (auto& [c, part] : content_components(a.numer)) {
    Content key = c;
    for (int x = 0; x < a.n; ++x) key[x] -= long(a.k) * dc[x];
    out.emplace(std::move(key), make_raw(a.m, a.n, a.alpha, a.k, std::move(part)));
  }
  return out;
}

Localized dehom_x(int i, int j, int alpha, int m, int n) {
  if (m < 1 || m >= n) fail(Err::InvalidConfig, "need 1 <= m < n");
  if (i < 1 || i > m || j < 1 || j > n - m)
    fail(Err::IndexOutOfRange, "dehomogenised generator outside the m x (n-m) grid");
  alpha = tilde(alpha, n);
  IndexSet base = consecutive_set(alpha, m, n);
  std::vector<int> e;
  int drop = tilde(alpha + m - i, n);
  for (int x : base.elems)
    if (x != drop) e.push_back(x);
  e.push_back(tilde(j + alpha + m - 1, n));
  std::sort(e.begin(), e.end());
  return loc_make(maximal_minor(m, n, make_index_set(n, std::move(e))), 1, alpha);
}

int sigma_exponent(int i, int j, int alpha, int m, int n) {
  Localized x = dehom_x(i, j, alpha, m, n);
  NCPoly d = consecutive_minor(alpha, m, n);
  // [M_alpha] x = q^e x [M_alpha] with x = numer * [M_alpha]^(-1) means
  // numer * [M_alpha] = q^(-e) [M_alpha] * numer.
  return -quasi_exponent(x.numer, d);
}

Localized rho(const IndexSet& rows, const IndexSet& cols, int alpha, int m, int n) {
  if (rows.n != m) fail(Err::AmbientMismatch, "row set must live in 1..m");
  if (cols.n != n - m) fail(Err::AmbientMismatch, "column set must live in 1..(n-m)");
  if (rows.size() != cols.size()) fail(Err::WrongCardinality, "need |rows| = |cols|");
  alpha = tilde(alpha, n);
  IndexSet base = consecutive_set(alpha, m, n);
  std::vector<int> e = base.elems;
  for (int i : rows.elems) {
    int drop = tilde(alpha + m - i, n);
    auto it = std::find(e.begin(), e.end(), drop);
    if (it == e.end()) fail(Err::Internal, "rho drop index missing from the center set");
    e.erase(it);
  }
  for (int j : cols.elems) e.push_back(tilde(alpha + m - 1 + j, n));
  std::sort(e.begin(), e.end());
  return loc_make(maximal_minor(m, n, make_index_set(n, std::move(e))), 1, alpha);
}

PhiImage phi_of_minor(const IndexSet& i, int alpha) {
  const int n = i.n;
  const int m = int(i.size());
  if (m < 1 || m >= n) fail(Err::WrongCardinality, "need a maximal minor: 1 <= |I| < n rows");
  alpha = tilde(alpha, n);
  IndexSet base = consecutive_set(alpha, m, n);
  std::vector<int> rows, cols;
  for (int e : base.elems)
    if (!i.contains(e)) rows.push_back(tilde(alpha + m - e, n));
  for (int f : i.elems)
    if (!base.contains(f)) cols.push_back(tilde(f - (alpha + m - 1), n));
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  return PhiImage{make_index_set(m, std::move(rows)), make_index_set(n - m, std::move(cols)), 1};
}

Localized eval_x_minor(const IndexSet& rows, const IndexSet& cols, int alpha, int m, int n) {
  if (rows.size() != cols.size()) fail(Err::WrongCardinality, "minor needs |rows| = |cols|");
  const std::size_t t = rows.size();
  alpha = tilde(alpha, n);
  if (t == 0) return loc_make(NCPoly::one(m, n), 0, alpha);
  std::vector<std::vector<Localized>> x(m + 1);
  for (int i = 1; i <= m; ++i) {
    x[i].resize(n - m + 1);
    for (int j = 1; j <= n - m; ++j) x[i][j] = dehom_x(i, j, alpha, m, n);
  }
  Localized acc = make_raw(m, n, alpha, 0, NCPoly::zero(m, n));
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    long inv = 0;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        if (perm[a] > perm[b]) ++inv;
    Localized prod = loc_make(NCPoly::one(m, n), 0, alpha);
    for (std::size_t k = 0; k < t; ++k)
      prod = loc_mul(prod, x[rows.elems[perm[k]]][cols.elems[k]]);
    Laurent c = Laurent::term((inv % 2 == 0) ? Int(1) : Int(-1), inv * m);
    acc = loc_add(acc, loc_scale(c, prod));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Report verify_dehom_qmatrix(int m, int n, int alpha) {
  Report rep;
  alpha = tilde(alpha, n);
  const std::string tag = " (alpha=" + std::to_string(alpha) + ")";
  std::vector<std::vector<Localized>> x(m + 1);
  for (int i = 1; i <= m; ++i) {
    x[i].resize(n - m + 1);
    for (int j = 1; j <= n - m; ++j) x[i][j] = dehom_x(i, j, alpha, m, n);
  }
  for (const auto& rel : defining_relations(m, n - m, m)) {
    Localized acc = make_raw(m, n, alpha, 0, NCPoly::zero(m, n));
    for (const auto& t : rel.terms)
      acc = loc_add(acc, loc_scale(t.coeff, loc_mul(x[t.g1.first][t.g1.second],
                                                    x[t.g2.first][t.g2.second])));
    rep.add("dehom " + rel.name + tag, loc_is_zero(acc),
            loc_is_zero(acc) ? "" : to_string(acc));
  }
  Localized dloc = loc_make(consecutive_minor(alpha, m, n), 0, alpha);
  for (const auto& i : all_m_subsets(m, n)) {
    PhiImage ph = phi_of_minor(i, alpha);
    Localized back = loc_mul(rho(ph.rows, ph.cols, alpha, m, n), dloc);
    bool ok = loc_eq(back, loc_make(maximal_minor(m, n, i), 0, alpha));
    rep.add("round trip " + to_string(i) + tag, ok, ok ? "" : to_string(back));
    bool agree = loc_eq(eval_x_minor(ph.rows, ph.cols, alpha, m, n),
                        rho(ph.rows, ph.cols, alpha, m, n));
    rep.add("rho closed form vs generator evaluation " + pair_to_string(ph.rows, ph.cols) + tag,
            agree);
  }
  return rep;
}

Report verify_sigma_tables(int m, int n) {
  Report rep;
  for (int alpha : {1, 2}) {
    Localized y = loc_make(consecutive_minor(alpha, m, n), 0, alpha);
    bool ok = true;
    std::ostringstream table;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n - m; ++j) {
        int e = sigma_exponent(i, j, alpha, m, n);
        int expect = (alpha == 1) ? 1 : (j < n - m ? 1 : -1);
        Localized xx = dehom_x(i, j, alpha, m, n);
        auto lambda = loc_monomial_ratio(loc_mul(y, xx), loc_mul(xx, y));
        bool match = (e == expect) && lambda && *lambda == q_power(e, m);
        if (!match) ok = false;
        table << "x[" << i << "," << j << "]:q^" << e << " ";
      }
    rep.add("sigma exponents (alpha=" + std::to_string(alpha) + ")", ok, table.str());
  }
  return rep;
}

}  // namespace qgr
