#include "qgrass/twist.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

namespace qgr {

namespace {

Localized loc_zero(int m, int n, int alpha) {
  return Localized{m, n, alpha, 0, NCPoly::zero(m, n)};
}

Laurent monomial_inverse(const Laurent& a) {
  if (!a.is_monomial()) fail(Err::NotAUnit, "inverse of a non-monomial scalar");
  long e = a.min_exp();
  Int c = a.coeff(e);
  if (c != 1 && c != -1) fail(Err::NotAUnit, "inverse of a non-unit scalar");
  return Laurent::term(c, -e);
}

Content add_contents(const Content& a, const Content& b) {
  Content r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::string render_minor_combo(const std::vector<Laurent>& coeffs,
                               const std::vector<IndexSet>& minors) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(coeffs[i]) << ")*" << to_string(minors[i]);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

Laurent cocycle_value(const Content& s, const Content& u) {
  if (s.size() != u.size() || s.empty())
    fail(Err::LengthMismatch, "cocycle needs two contents of equal positive length");
  long head = 0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) head += u[j];
  return Laurent::term(1, 2 * s.back() * head);
}

bool check_cocycle_identity(const std::vector<std::array<Content, 3>>& triples) {
  for (const auto& [s, u, v] : triples) {
    if (cocycle_value(s, add_contents(u, v)) * cocycle_value(u, v) !=
        cocycle_value(s, u) * cocycle_value(add_contents(s, u), v))
      return false;
  }
  return true;
}

Report verify_cocycle_identity(int n, int samples, std::uint64_t seed) {
  Report rep;
  if (n < 1) fail(Err::InvalidConfig, "need n >= 1");
  if (n <= 5) {
    std::vector<std::array<Content, 3>> triples;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Content s(n, 0), u(n, 0), v(n, 0);
          s[i] = 1;
          u[j] = 1;
          v[k] = 1;
          triples.push_back({s, u, v});
        }
    rep.add("cocycle identity, all standard-basis triples (n=" + std::to_string(n) + ")",
            check_cocycle_identity(triples));
  }
  if (n <= 4) {
    std::vector<std::array<Content, 3>> triples;
    const long lim = 1L << n;
    for (long a = 0; a < lim; ++a)
      for (long b = 0; b < lim; ++b)
        for (long c = 0; c < lim; ++c) {
          Content s(n), u(n), v(n);
          for (int j = 0; j < n; ++j) {
            s[j] = (a >> j) & 1;
            u[j] = (b >> j) & 1;
            v[j] = (c >> j) & 1;
          }
          triples.push_back({s, u, v});
        }
    rep.add("cocycle identity, all indicator triples (n=" + std::to_string(n) + ")",
            check_cocycle_identity(triples));
  }
  std::vector<std::array<Content, 3>> triples;
  std::uint64_t st = seed;
  for (int k = 0; k < samples; ++k) {
    Content s(n), u(n), v(n);
    for (int j = 0; j < n; ++j) {
      s[j] = long(rng_below(st, 7)) - 3;
      u[j] = long(rng_below(st, 7)) - 3;
      v[j] = long(rng_below(st, 7)) - 3;
    }
    triples.push_back({s, u, v});
  }
  rep.add("cocycle identity, " + std::to_string(samples) + " random triples",
          check_cocycle_identity(triples));
  return rep;
}

Content x_generator_content(int i, int j, int m, int n) {
  if (i < 1 || i > m || j < 1 || j > n - m)
    fail(Err::IndexOutOfRange, "generator outside the m x (n-m) grid");
  Content c(n, 0);
  c[j + m - 1] += 1;
  c[m - i] -= 1;
  return c;
}

Content y_generator_content(int m, int n) {
  Content c(n, 0);
  for (int j = 0; j < m; ++j) c[j] = 1;
  return c;
}

Report verify_cocycle_values(int m, int n) {
  Report rep;
  Content y = y_generator_content(m, n);
  {
    bool ok = true;
    for (int i = 1; i <= m && ok; ++i)
      for (int j = 1; j <= n - m && ok; ++j) {
        auto c = loc_content(dehom_x(i, j, 1, m, n));
        ok = c && *c == x_generator_content(i, j, m, n);
      }
    auto yc = loc_content(loc_make(consecutive_minor(1, m, n), 0, 1));
    ok = ok && yc && *yc == y;
    rep.add("generator contents at center 1", ok);
  }
  bool ok = true;
  std::string witness;
  auto expect = [&](const Laurent& got, const Laurent& want, const std::string& what) {
    if (ok && got != want) {
      ok = false;
      witness = what + ": got " + to_string(got) + ", want " + to_string(want);
    }
  };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n - m; ++j) {
      Content a = x_generator_content(i, j, m, n);
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= n - m; ++l) {
          Content b = x_generator_content(k, l, m, n);
          Laurent want = (j == n - m && l == n - m) ? p_power(-1) : Laurent(1);
          expect(cocycle_value(a, b), want,
                 "c(x[" + std::to_string(i) + "," + std::to_string(j) + "], x[" +
                     std::to_string(k) + "," + std::to_string(l) + "])");
        }
      expect(cocycle_value(a, y), j == n - m ? q_power(2, m) : Laurent(1),
             "c(x[" + std::to_string(i) + "," + std::to_string(j) + "], y)");
      expect(cocycle_value(y, a), Laurent(1),
             "c(y, x[" + std::to_string(i) + "," + std::to_string(j) + "])");
    }
  expect(cocycle_value(y, y), Laurent(1), "c(y, y)");
  rep.add("cocycle values on the generator contents", ok, witness);
  return rep;
}

NCPoly twisted_mul(const NCPoly& a, const NCPoly& b) {
  if (a.is_zero() || b.is_zero()) return NCPoly::zero(a.m(), a.n());
  NCPoly acc = NCPoly::zero(a.m(), a.n());
  for (const auto& [s, pa] : content_components(a))
    for (const auto& [u, pb] : content_components(b))
      acc = nc_add(acc, nc_scale(cocycle_value(s, u), nc_mul(pa, pb)));
  return acc;
}

Localized twisted_mul(const Localized& a, const Localized& b) {
  if (loc_is_zero(a) || loc_is_zero(b)) return loc_zero(a.m, a.n, a.alpha);
  Localized acc = loc_zero(a.m, a.n, a.alpha);
  for (const auto& [s, pa] : loc_content_components(a))
    for (const auto& [u, pb] : loc_content_components(b))
      acc = loc_add(acc, loc_scale(cocycle_value(s, u), loc_mul(pa, pb)));
  return acc;
}

Laurent minor_y_cocycle(const IndexSet& rows, const IndexSet& cols, int m, int n) {
  if (rows.size() != cols.size()) fail(Err::WrongCardinality, "need |rows| = |cols|");
  Content c(n, 0);
  for (int j : cols.elems) {
    if (j < 1 || j > n - m) fail(Err::IndexOutOfRange, "column outside 1..(n-m)");
    c[m + j - 1] += 1;
  }
  for (int i : rows.elems) {
    if (i < 1 || i > m) fail(Err::IndexOutOfRange, "row outside 1..m");
    c[m - i] -= 1;
  }
  return cocycle_value(c, y_generator_content(m, n));
}

ThetaImage theta_minor(const IndexSet& j, int m, int n) {
  if (j.n != n) fail(Err::AmbientMismatch, "column set lives in a different ambient");
  if (int(j.size()) != m) fail(Err::WrongCardinality, "cycling is defined on size-m sets");
  CycledSet cy = cycle_index_set(j);
  Laurent lam = cy.crossed ? q_power(-2, m) : Laurent(1);
  return ThetaImage{cy.set, lam};
}

TwistedMinor twist_of_minor(const IndexSet& rows, const IndexSet& cols, int m, int n) {
  if (rows.n != m) fail(Err::AmbientMismatch, "row set must live in 1..m");
  if (cols.n != n - m) fail(Err::AmbientMismatch, "column set must live in 1..(n-m)");
  if (rows.size() != cols.size()) fail(Err::WrongCardinality, "minor needs |rows| = |cols|");
  const std::size_t t = rows.size();
  std::vector<std::vector<Localized>> x(m + 1);
  for (int i = 1; i <= m; ++i) {
    x[i].resize(n - m + 1);
    for (int j = 1; j <= n - m; ++j) x[i][j] = dehom_x(i, j, 1, m, n);
  }
  Localized acc = loc_zero(m, n, 1);
  bool steps_trivial = true;
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    long inv = 0;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        if (perm[a] > perm[b]) ++inv;
    Localized prod = loc_make(NCPoly::one(m, n), 0, 1);
    Content cont(n, 0);
    for (std::size_t k = 0; k < t; ++k) {
      int row = rows.elems[perm[k]];
      int col = cols.elems[k];
      Content gc = x_generator_content(row, col, m, n);
      if (!cocycle_value(cont, gc).is_one()) steps_trivial = false;
      prod = twisted_mul(prod, x[row][col]);
      cont = add_contents(cont, gc);
    }
    acc = loc_add(acc, loc_scale(Laurent::term((inv % 2 == 0) ? Int(1) : Int(-1), inv * m),
                                 prod));
  } while (std::next_permutation(perm.begin(), perm.end()));
  TwistedMinor out;
  out.value = eval_x_minor(rows, cols, 1, m, n);
  out.equal = loc_eq(acc, out.value);
  out.steps_trivial = steps_trivial;
  return out;
}

Report verify_twisted_qmatrix(int m, int n) {
  Report rep;
  std::vector<std::vector<Localized>> x(m + 1);
  for (int i = 1; i <= m; ++i) {
    x[i].resize(n - m + 1);
    for (int j = 1; j <= n - m; ++j) x[i][j] = dehom_x(i, j, 1, m, n);
  }
  for (const auto& rel : defining_relations(m, n - m, m)) {
    Localized acc = loc_zero(m, n, 1);
    for (const auto& t : rel.terms)
      acc = loc_add(acc, loc_scale(t.coeff, twisted_mul(x[t.g1.first][t.g1.second],
                                                        x[t.g2.first][t.g2.second])));
    rep.add("twisted " + rel.name, loc_is_zero(acc), loc_is_zero(acc) ? "" : to_string(acc));
  }
  Localized y = loc_make(consecutive_minor(1, m, n), 0, 1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n - m; ++j) {
      int e = (j < n - m) ? 1 : -1;
      bool ok = loc_eq(twisted_mul(y, x[i][j]),
                       loc_scale(q_power(e, m), twisted_mul(x[i][j], y)));
      rep.add("twisted y commutation x[" + std::to_string(i) + "," + std::to_string(j) +
                  "] scalar q^" + std::to_string(e),
              ok);
    }
  return rep;
}

Report verify_z_model(int m, int n) {
  Report rep;
  std::vector<std::vector<Localized>> x(m + 1), z(m + 1);
  for (int i = 1; i <= m; ++i) {
    x[i].resize(n - m + 1);
    z[i].resize(n - m + 1);
    for (int j = 1; j <= n - m; ++j) {
      x[i][j] = dehom_x(i, j, 1, m, n);
      z[i][j] = dehom_x(i, j, 2, m, n);
    }
  }
  for (const auto& rel : defining_relations(m, n - m, m)) {
    Localized ax = loc_zero(m, n, 1);
    Localized az = loc_zero(m, n, 2);
    for (const auto& t : rel.terms) {
      ax = loc_add(ax, loc_scale(t.coeff, twisted_mul(x[t.g1.first][t.g1.second],
                                                      x[t.g2.first][t.g2.second])));
      az = loc_add(az, loc_scale(t.coeff, loc_mul(z[t.g1.first][t.g1.second],
                                                  z[t.g2.first][t.g2.second])));
    }
    bool ok = loc_is_zero(ax) && loc_is_zero(az);
    rep.add("both models: " + rel.name, ok,
            ok ? "" : "center 1: " + to_string(ax) + "; center 2: " + to_string(az));
  }
  Localized y1 = loc_make(consecutive_minor(1, m, n), 0, 1);
  Localized y2 = loc_make(consecutive_minor(2, m, n), 0, 2);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n - m; ++j) {
      auto l1 = loc_monomial_ratio(twisted_mul(y1, x[i][j]), twisted_mul(x[i][j], y1));
      auto l2 = loc_monomial_ratio(loc_mul(y2, z[i][j]), loc_mul(z[i][j], y2));
      bool ok = l1 && l2 && *l1 == *l2;
      rep.add("y commutation x[" + std::to_string(i) + "," + std::to_string(j) +
                  "] twisted vs recentered",
              ok,
              ok ? "scalar " + to_string(*l1)
                 : std::string(l1 ? "center 1: " + to_string(*l1) : "center 1: none") +
                       (l2 ? "; center 2: " + to_string(*l2) : "; center 2: none"));
    }
  return rep;
}

Report verify_twisted_minors(int m, int n) {
  Report rep;
  for (int k = 1; k <= std::min(m, n - m); ++k)
    for (const auto& rows : all_m_subsets(k, m))
      for (const auto& cols : all_m_subsets(k, n - m)) {
        TwistedMinor tm = twist_of_minor(rows, cols, m, n);
        rep.add("twisted minor build " + pair_to_string(rows, cols),
                tm.equal && tm.steps_trivial,
                tm.steps_trivial ? (tm.equal ? "" : "products differ")
                                 : "a binary step had a nontrivial cocycle factor");
      }
  return rep;
}

Report verify_twisted_associativity(int m, int n, int samples, std::uint64_t seed) {
  Report rep;
  std::uint64_t st = seed;
  auto coeff = [&]() {
    long c = long(rng_below(st, 4)) - 2;
    if (c == 0) c = 1;
    return Laurent::term(c, long(rng_below(st, 5)) - 2);
  };
  {
    std::vector<Localized> gens;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n - m; ++j) gens.push_back(dehom_x(i, j, 1, m, n));
    // numerators are products of maximal minors, so the degree of a triple
    // product grows with m; keep it bounded
    const int maxFactors = m <= 2 ? 3 : 1;
    auto sample = [&]() {
      Localized e = loc_scale(coeff(), loc_make(NCPoly::one(m, n), 0, 1));
      int len = 1 + int(rng_below(st, maxFactors));
      for (int k = 0; k < len; ++k) e = loc_mul(e, gens[rng_below(st, gens.size())]);
      return e;
    };
    bool ok = true;
    std::string witness;
    for (int s = 0; s < samples && ok; ++s) {
      Localized a = sample(), b = sample(), c = sample();
      if (!loc_eq(twisted_mul(twisted_mul(a, b), c), twisted_mul(a, twisted_mul(b, c)))) {
        ok = false;
        witness = "localized sample " + std::to_string(s);
      }
    }
    rep.add("twisted associativity, " + std::to_string(samples) +
                " localized homogeneous triples",
            ok, witness);
  }
  {
    // small quantum minors, possibly summed across two different contents to
    // exercise the per-component twisting
    auto pick_set = [&](int ambient, int size) {
      std::vector<int> pool(ambient);
      std::iota(pool.begin(), pool.end(), 1);
      std::vector<int> chosen;
      for (int k = 0; k < size; ++k) {
        std::size_t at = rng_below(st, pool.size());
        chosen.push_back(pool[at]);
        pool.erase(pool.begin() + long(at));
      }
      std::sort(chosen.begin(), chosen.end());
      return IndexSet{ambient, std::move(chosen)};
    };
    auto small_minor = [&]() {
      int size = 1 + int(rng_below(st, std::min(m, 2)));
      return nc_scale(coeff(), quantum_minor(m, n, pick_set(m, size), pick_set(n, size)));
    };
    auto sample = [&]() {
      NCPoly e = small_minor();
      if (rng_below(st, 2) == 0) e = nc_add(e, small_minor());
      return e;
    };
    bool ok = true;
    std::string witness;
    for (int s = 0; s < samples && ok; ++s) {
      NCPoly a = sample(), b = sample(), c = sample();
      if (!nc_eq(twisted_mul(twisted_mul(a, b), c), twisted_mul(a, twisted_mul(b, c)))) {
        ok = false;
        witness = "minor sample " + std::to_string(s);
      }
    }
    rep.add("twisted associativity, " + std::to_string(samples) + " mixed minor triples",
            ok, witness);
  }
  return rep;
}

Report verify_composite(const IndexSet& iset, int m, int n) {
  Report rep;
  const std::string tag = " " + to_string(iset);
  Localized y1 = loc_make(consecutive_minor(1, m, n), 0, 1);
  Localized y2 = loc_make(consecutive_minor(2, m, n), 0, 2);
  PhiImage ph = phi_of_minor(iset, 1);
  bool a = loc_eq(loc_mul(eval_x_minor(ph.rows, ph.cols, 1, m, n), y1),
                  loc_make(maximal_minor(m, n, iset), 0, 1));
  rep.add("dehom factorization" + tag, a);
  Laurent coc = minor_y_cocycle(ph.rows, ph.cols, m, n);
  bool b = coc == q_power(iset.contains(n) ? 2 : 0, m);
  rep.add("cocycle against y" + tag, b, b ? "" : to_string(coc));
  bool c = loc_eq(eval_x_minor(ph.rows, ph.cols, 2, m, n),
                  rho(ph.rows, ph.cols, 2, m, n));
  rep.add("recentered closed form" + tag, c);
  ThetaImage th = theta_minor(iset, m, n);
  Localized lhs = loc_scale(monomial_inverse(coc),
                            loc_mul(rho(ph.rows, ph.cols, 2, m, n), y2));
  Localized rhs = loc_make(nc_scale(th.lambda, maximal_minor(m, n, th.set)), 0, 2);
  bool d = loc_eq(lhs, rhs);
  rep.add("cycled minor composite" + tag, d,
          d ? "lands on (" + to_string(th.lambda) + ")*" + to_string(th.set) : "");
  return rep;
}

Report verify_composite(int m, int n) {
  Report rep;
  for (const auto& iset : all_m_subsets(m, n)) rep.merge(verify_composite(iset, m, n));
  return rep;
}

Report verify_theta_transport(int m, int n) {
  Report rep;
  auto minors = all_m_subsets(m, n);
  const std::size_t nm = minors.size();
  std::vector<NCPoly> mp(nm);
  std::vector<Content> mc(nm);
  std::map<IndexSet, std::size_t> pos;
  for (std::size_t i = 0; i < nm; ++i) {
    mp[i] = maximal_minor(m, n, minors[i]);
    mc[i] = minor_content(minors[i]);
    pos[minors[i]] = i;
  }
  std::vector<ThetaImage> th(nm);
  for (std::size_t i = 0; i < nm; ++i) th[i] = theta_minor(minors[i], m, n);

  // image of a coefficient vector over ordered pairs, with each pair's
  // cocycle correction and cycling scalars applied
  auto transport_pairs = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                             const std::vector<Laurent>& coeffs) {
    NCPoly acc = NCPoly::zero(m, n);
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      if (coeffs[s].is_zero()) continue;
      auto [i, j] = pairs[s];
      Laurent f = coeffs[s] * monomial_inverse(cocycle_value(mc[i], mc[j])) * th[i].lambda *
                  th[j].lambda;
      acc = nc_add(acc, nc_scale(f, nc_mul(maximal_minor(m, n, th[i].set),
                                           maximal_minor(m, n, th[j].set))));
    }
    return acc;
  };

  auto rels = quadratic_relations(m, n);
  {
    bool ok = true;
    std::string witness;
    for (std::size_t r = 0; r < rels.size() && ok; ++r) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::vector<Laurent> coeffs;
      for (const auto& t : rels[r].terms) {
        pairs.emplace_back(pos.at(t.left), pos.at(t.right));
        coeffs.push_back(t.coeff);
      }
      if (!transport_pairs(pairs, coeffs).is_zero()) {
        ok = false;
        witness = "relation " + std::to_string(r) + ": " + to_string(rels[r]);
      }
    }
    rep.add("all " + std::to_string(rels.size()) + " transported relations vanish", ok,
            witness);
  }

  // multiplicativity on minor pairs: re-expand each product over the other
  // products in its content class and transport both sides
  std::map<Content, std::vector<std::pair<std::size_t, std::size_t>>> classes;
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j)
      classes[add_contents(mc[i], mc[j])].emplace_back(i, j);
  bool mult_ok = true;
  std::string mult_witness;
  int reexpanded = 0;
  for (const auto& [content, pairs] : classes) {
    if (pairs.size() < 2) continue;
    std::vector<NCPoly> prods;
    std::map<Word, std::size_t> wordrow;
    for (auto [i, j] : pairs) {
      prods.push_back(nc_mul(mp[i], mp[j]));
      for (const auto& [w, c] : prods.back().terms()) wordrow.emplace(w, 0);
    }
    std::size_t r = 0;
    for (auto& [w, idx] : wordrow) idx = r++;
    for (std::size_t target = 0; target < pairs.size() && mult_ok; ++target) {
      ScalarMatrix a(wordrow.size(), pairs.size() - 1);
      std::size_t col = 0;
      std::vector<std::size_t> colpair;
      for (std::size_t s = 0; s < pairs.size(); ++s) {
        if (s == target) continue;
        for (const auto& [w, c] : prods[s].terms()) a.at(wordrow[w], col) = c;
        colpair.push_back(s);
        ++col;
      }
      std::vector<Laurent> rhs(wordrow.size());
      for (const auto& [w, c] : prods[target].terms()) rhs[wordrow[w]] = c;
      auto sol = solve_fraction_free(a, rhs);
      if (!sol) continue;  // product independent of the rest of its class
      ++reexpanded;
      std::vector<Laurent> expansion(pairs.size());
      for (std::size_t s = 0; s < colpair.size(); ++s) expansion[colpair[s]] = sol->num[s];
      std::vector<Laurent> direct(pairs.size());
      direct[target] = sol->den;
      if (!nc_eq(transport_pairs(pairs, expansion), transport_pairs(pairs, direct))) {
        mult_ok = false;
        auto [i, j] = pairs[target];
        mult_witness = to_string(minors[i]) + to_string(minors[j]);
      }
    }
  }
  rep.add("multiplicative on minor pairs (" + std::to_string(reexpanded) +
              " products re-expanded)",
          mult_ok, mult_witness);

  if (m == 2 && n == 4) {
    auto ms = [&](std::initializer_list<int> v) { return make_index_set(4, v); };
    auto prod = [&](IndexSet a, IndexSet b) {
      return nc_mul(maximal_minor(2, 4, a), maximal_minor(2, 4, b));
    };
    std::vector<std::pair<std::size_t, std::size_t>> pp = {
        {pos.at(ms({1, 2})), pos.at(ms({3, 4}))},
        {pos.at(ms({1, 3})), pos.at(ms({2, 4}))},
        {pos.at(ms({1, 4})), pos.at(ms({2, 3}))}};
    std::vector<Laurent> pc = {Laurent(1), -q_power(1, 2), q_power(2, 2)};
    NCPoly plucker = NCPoly::zero(2, 4);
    for (std::size_t s = 0; s < pp.size(); ++s)
      plucker = nc_add(plucker, nc_scale(pc[s], nc_mul(mp[pp[s].first], mp[pp[s].second])));
    rep.add("quadratic identity at (2,4)", plucker.is_zero());
    rep.add("its transport vanishes", transport_pairs(pp, pc).is_zero());
    NCPoly shifted = nc_add(
        nc_sub(nc_scale(q_power(-2, 2), prod(ms({2, 3}), ms({1, 4}))),
               nc_scale(q_power(-1, 2), prod(ms({2, 4}), ms({1, 3})))),
        nc_scale(q_power(-2, 2), prod(ms({1, 2}), ms({3, 4}))));
    rep.add("transport equals the shifted identity", nc_eq(transport_pairs(pp, pc), shifted));
    NCPoly naive = nc_add(nc_sub(prod(ms({2, 3}), ms({1, 4})),
                                 nc_scale(q_power(1, 2), prod(ms({2, 4}), ms({1, 3})))),
                          nc_scale(q_power(2, 2), prod(ms({1, 2}), ms({3, 4}))));
    rep.add("uncorrected cycling fails", !naive.is_zero() && nc_eq(naive, nonautomorphism_witness()));
  }
  return rep;
}

MinorSet cycle_minor_set(const MinorSet& s) {
  MinorSet out;
  for (const auto& j : s) out.insert(cycle_index_set(j).set);
  return out;
}

Report verify_theta_cycle(int m, int n) {
  Report rep;
  auto minors = all_m_subsets(m, n);
  {
    std::set<IndexSet> images;
    bool crossed_ok = true;
    for (const auto& j : minors) {
      CycledSet cy = cycle_index_set(j);
      images.insert(cy.set);
      if (cy.crossed != j.contains(n)) crossed_ok = false;
    }
    rep.add("cycling is a bijection on column sets", images.size() == minors.size());
    rep.add("crossing flag marks the sets containing n", crossed_ok);
  }
  {
    bool ok = true;
    std::string witness;
    for (const auto& j : minors) {
      IndexSet cur = j;
      Laurent total(1);
      for (int step = 0; step < n; ++step) {
        ThetaImage th = theta_minor(cur, m, n);
        total = total * th.lambda;
        cur = th.set;
      }
      if (!(cur == j) || total != q_power(-2 * m, m)) {
        ok = false;
        witness = to_string(j) + " returned with scalar " + to_string(total);
      }
    }
    rep.add("n-fold cycling is the identity with scalar q^-" + std::to_string(2 * m), ok,
            witness);
  }
  {
    MinorSet full(minors.begin(), minors.end());
    MinorSet with_one, with_n;
    for (const auto& j : minors) {
      if (j.contains(1)) with_one.insert(j);
      if (j.contains(n)) with_n.insert(j);
    }
    rep.add("full minor set is fixed", cycle_minor_set(full) == full);
    bool card_ok = cycle_minor_set(with_one).size() == with_one.size() &&
                   cycle_minor_set(with_n).size() == with_n.size();
    rep.add("set cycling preserves cardinality", card_ok);
    MinorSet uni, inter;
    std::set_union(with_one.begin(), with_one.end(), with_n.begin(), with_n.end(),
                   std::inserter(uni, uni.end()));
    std::set_intersection(with_one.begin(), with_one.end(), with_n.begin(), with_n.end(),
                          std::inserter(inter, inter.end()));
    MinorSet c1 = cycle_minor_set(with_one);
    MinorSet cn = cycle_minor_set(with_n);
    MinorSet cu, ci;
    std::set_union(c1.begin(), c1.end(), cn.begin(), cn.end(), std::inserter(cu, cu.end()));
    std::set_intersection(c1.begin(), c1.end(), cn.begin(), cn.end(),
                          std::inserter(ci, ci.end()));
    rep.add("set cycling commutes with union and intersection",
            cycle_minor_set(uni) == cu && cycle_minor_set(inter) == ci);
    MinorSet cur = full;
    MinorSet one = {minors.front()};
    MinorSet it = one;
    for (int step = 0; step < n; ++step) {
      cur = cycle_minor_set(cur);
      it = cycle_minor_set(it);
    }
    rep.add("n-fold set cycling is the identity", cur == full && it == one);
  }
  return rep;
}

DomainProbeResult domain_probe(int m, int n, const std::vector<IndexSet>& quotient_by,
                               int degree_bound, std::uint64_t seed) {
  if (degree_bound < 1 || degree_bound > 2)
    fail(Err::InvalidConfig, "the probe only understands degree bounds 1 and 2");
  for (const auto& s : quotient_by)
    if (s.n != n || int(s.size()) != m)
      fail(Err::WrongCardinality, "quotient generators must be maximal minors");
  DomainProbeResult res;
  auto minors = all_m_subsets(m, n);
  const std::size_t nm = minors.size();
  std::vector<NCPoly> mp(nm);
  std::vector<Content> mc(nm);
  std::map<IndexSet, std::size_t> pos;
  for (std::size_t i = 0; i < nm; ++i) {
    mp[i] = maximal_minor(m, n, minors[i]);
    mc[i] = minor_content(minors[i]);
    pos[minors[i]] = i;
  }

  // degree-1 span of the quotient generators, in word coordinates
  std::map<Word, std::size_t> w1;
  for (const auto& p : mp)
    for (const auto& [w, c] : p.terms()) w1.emplace(w, 0);
  std::size_t r = 0;
  for (auto& [w, idx] : w1) idx = r++;
  auto vec1 = [&](const NCPoly& p) {
    std::vector<Laurent> v(w1.size());
    for (const auto& [w, c] : p.terms()) v[w1.at(w)] = c;
    return v;
  };
  ScalarMatrix deg1(quotient_by.size(), w1.size());
  for (std::size_t s = 0; s < quotient_by.size(); ++s) {
    auto v = vec1(mp[pos.at(quotient_by[s])]);
    for (std::size_t c = 0; c < v.size(); ++c) deg1.at(s, c) = v[c];
  }
  if (rank(deg1) == nm) {
    res.degenerate = true;
    return res;
  }
  // a product of two nonzero elements has degree 2, over a degree-1 bound
  if (degree_bound < 2) return res;
  std::vector<bool> survives(nm);
  for (std::size_t i = 0; i < nm; ++i) survives[i] = !in_row_span(deg1, vec1(mp[i]));

  // degree-2 component of the two-sided ideal, and all pairwise products
  std::vector<std::vector<NCPoly>> prod(nm, std::vector<NCPoly>(nm));
  std::map<Word, std::size_t> w2;
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      prod[i][j] = nc_mul(mp[i], mp[j]);
      for (const auto& [w, c] : prod[i][j].terms()) w2.emplace(w, 0);
    }
  r = 0;
  for (auto& [w, idx] : w2) idx = r++;
  auto vec2 = [&](const NCPoly& p) {
    std::vector<Laurent> v(w2.size());
    for (const auto& [w, c] : p.terms()) v[w2.at(w)] = c;
    return v;
  };
  ScalarMatrix deg2(2 * quotient_by.size() * nm, w2.size());
  std::size_t row = 0;
  for (const auto& s : quotient_by) {
    std::size_t i = pos.at(s);
    for (std::size_t k = 0; k < nm; ++k) {
      auto a = vec2(prod[i][k]);
      auto b = vec2(prod[k][i]);
      for (std::size_t c = 0; c < w2.size(); ++c) {
        deg2.at(row, c) = a[c];
        deg2.at(row + 1, c) = b[c];
      }
      row += 2;
    }
  }

  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      if (!survives[i] || !survives[j]) continue;
      ++res.pairs_scanned;
      // the twisted product differs from the plain one by a unit scalar here
      if (in_row_span(deg2, vec2(prod[i][j])))
        res.zero_divisors.push_back(to_string(minors[i]) + " * " + to_string(minors[j]));
    }

  const int kSamples = 12;
  std::uint64_t st = seed;
  for (int s = 0; s < kSamples; ++s) {
    std::vector<Laurent> ca(nm), cb(nm);
    auto draw = [&](std::vector<Laurent>& cs) {
      for (int tries = 0; tries < 16; ++tries) {
        NCPoly u = NCPoly::zero(m, n);
        for (std::size_t i = 0; i < nm; ++i) {
          cs[i] = Laurent(long(rng_below(st, 5)) - 2);
          u = nc_add(u, nc_scale(cs[i], mp[i]));
        }
        if (!u.is_zero() && !in_row_span(deg1, vec1(u))) return u;
      }
      fail(Err::Internal, "could not sample outside the degree-1 span");
    };
    NCPoly u = draw(ca);
    NCPoly v = draw(cb);
    NCPoly uv = NCPoly::zero(m, n);
    for (std::size_t i = 0; i < nm; ++i)
      for (std::size_t j = 0; j < nm; ++j) {
        if (ca[i].is_zero() || cb[j].is_zero()) continue;
        uv = nc_add(uv, nc_scale(ca[i] * cb[j] * cocycle_value(mc[i], mc[j]), prod[i][j]));
      }
    ++res.samples_tested;
    if (in_row_span(deg2, vec2(uv)))
      res.zero_divisors.push_back("sample " + std::to_string(s) + ": (" +
                                  render_minor_combo(ca, minors) + ") * (" +
                                  render_minor_combo(cb, minors) + ")");
  }
  return res;
}

Report verify_domain_probe(int m, int n, int degree_bound, std::uint64_t seed) {
  Report rep;
  auto minors = all_m_subsets(m, n);
  {
    auto res = domain_probe(m, n, {}, degree_bound, seed);
    rep.add("no zero divisors without a quotient",
            !res.degenerate && res.zero_divisors.empty(),
            res.zero_divisors.empty() ? std::to_string(res.pairs_scanned) + " pairs, " +
                                            std::to_string(res.samples_tested) + " samples"
                                      : res.zero_divisors.front());
  }
  {
    auto res = domain_probe(m, n, minors, degree_bound, seed);
    rep.add("quotient by every minor degenerates", res.degenerate);
  }
  if (m == 2 && n == 4 && degree_bound >= 2) {
    auto res = domain_probe(m, n, {make_index_set(4, {1, 3})}, degree_bound, seed);
    const std::string want = "[1,4] * [2,3]";
    bool found = std::find(res.zero_divisors.begin(), res.zero_divisors.end(), want) !=
                 res.zero_divisors.end();
    rep.add("quotient by [1,3] exposes a zero divisor", !res.degenerate && found,
            found ? want : "pair not found");
  }
  return rep;
}

}  // namespace qgr
