#include "qgrass/qmatrix.hpp"

#include <atomic>
#include <sstream>

namespace qgr {

namespace {

constexpr std::uint64_t kDefaultCap = 10'000'000;
std::atomic<std::uint64_t> g_cap{kDefaultCap};

void add_term(std::map<Word, Laurent>& out, Word w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Rewrites c*w into the normal basis, accumulating into out. Works on the
// leftmost adjacent descent each time; the fourth relation family spawns one
// extra word per step, everything else is a scalar-adjusted swap.
void normalize_into(int m, std::map<Word, Laurent>& out, Word w, Laurent c) {
  if (c.is_zero()) return;
  const Laurent qinv = q_power(-1, m);
  const Laurent qdiff = q_power(1, m) - q_power(-1, m);
  const std::uint64_t cap = g_cap.load(std::memory_order_relaxed);
  std::uint64_t steps = 0;
  std::vector<std::pair<Word, Laurent>> work;
  work.emplace_back(std::move(w), std::move(c));
  while (!work.empty()) {
    auto [word, coeff] = std::move(work.back());
    work.pop_back();
    std::size_t p = 0;
    bool normal = true;
    for (; p + 1 < word.size(); ++p)
      if (word[p + 1] < word[p]) {
        normal = false;
        break;
      }
    if (normal) {
      add_term(out, std::move(word), coeff);
      continue;
    }
    if (++steps > cap) fail(Err::RewriteCapExceeded, "rewriting exceeded the step cap");
    const Gen hi = word[p], lo = word[p + 1];  // hi > lo
    if (hi.row == lo.row || hi.col == lo.col) {
      std::swap(word[p], word[p + 1]);
      work.emplace_back(std::move(word), coeff * qinv);
    } else if (hi.col < lo.col) {
      // strictly lower-left against upper-right: the factors commute
      std::swap(word[p], word[p + 1]);
      work.emplace_back(std::move(word), std::move(coeff));
    } else {
      Word corr = word;
      corr[p] = Gen{lo.row, hi.col};
      corr[p + 1] = Gen{hi.row, lo.col};
      std::swap(word[p], word[p + 1]);
      work.emplace_back(std::move(corr), -(qdiff * coeff));
      work.emplace_back(std::move(word), std::move(coeff));
    }
  }
}

void check_same_ambient(const NCPoly& a, const NCPoly& b) {
  if (a.m() != b.m() || a.n() != b.n())
    fail(Err::AmbientMismatch, "operands live in different quantum matrix algebras");
}

}  // namespace

NCPoly NCPoly::one(int m, int n) { return scalar(m, n, Laurent(1)); }

NCPoly NCPoly::scalar(int m, int n, const Laurent& c) {
  NCPoly r(m, n);
  if (!c.is_zero()) r.terms_.emplace(Word{}, c);
  return r;
}

NCPoly NCPoly::gen(int m, int n, int i, int j) {
  if (i < 1 || i > m || j < 1 || j > n)
    fail(Err::IndexOutOfRange, "generator X[" + std::to_string(i) + "," + std::to_string(j) +
                                   "] outside " + std::to_string(m) + "x" + std::to_string(n));
  NCPoly r(m, n);
  r.terms_.emplace(Word{Gen{std::uint8_t(i), std::uint8_t(j)}}, Laurent(1));
  return r;
}

void NCPoly::accumulate(const Word& w, const Laurent& c) {
  normalize_into(m_, terms_, w, c);
}

NCPoly nc_add(const NCPoly& a, const NCPoly& b) {
  check_same_ambient(a, b);
  NCPoly r = a;
  for (const auto& [w, c] : b.terms_) add_term(r.terms_, w, c);
  return r;
}

NCPoly nc_sub(const NCPoly& a, const NCPoly& b) {
  check_same_ambient(a, b);
  NCPoly r = a;
  for (const auto& [w, c] : b.terms_) add_term(r.terms_, w, -c);
  return r;
}

NCPoly nc_scale(const Laurent& c, const NCPoly& a) {
  NCPoly r(a.m(), a.n());
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
  return r;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  check_same_ambient(a, b);
  NCPoly r(a.m(), a.n());
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      normalize_into(a.m(), r.terms_, std::move(w), ca * cb);
    }
  return r;
}

bool nc_eq(const NCPoly& a, const NCPoly& b) {
  check_same_ambient(a, b);
  return a.terms() == b.terms();
}

NCPoly normalize_word(int m, int n, const Word& w, const Laurent& c) {
  for (const Gen& g : w)
    if (g.row < 1 || g.row > m || g.col < 1 || g.col > n)
      fail(Err::IndexOutOfRange, "word contains a generator outside the ambient algebra");
  NCPoly r(m, n);
  r.accumulate(w, c);
  return r;
}

std::uint64_t rewrite_step_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_rewrite_step_cap(std::uint64_t cap) {
  g_cap.store(cap == 0 ? kDefaultCap : cap, std::memory_order_relaxed);
}

Content word_content(int n, const Word& w) {
  Content c(n, 0);
  for (const Gen& g : w) c[g.col - 1] += 1;
  return c;
}

std::optional<Content> column_content(const NCPoly& a) {
  if (a.is_zero()) fail(Err::ZeroElement, "content of the zero element");
  std::optional<Content> result;
  for (const auto& [w, c] : a.terms()) {
    Content wc = word_content(a.n(), w);
    if (!result) {
      result = std::move(wc);
    } else if (*result != wc) {
      return std::nullopt;
    }
  }
  return result;
}

std::optional<std::pair<Word, Word>> inhomogeneity_witness(const NCPoly& a) {
  if (a.is_zero()) fail(Err::ZeroElement, "content of the zero element");
  const Word* first = nullptr;
  Content c0;
  for (const auto& [w, c] : a.terms()) {
    Content wc = word_content(a.n(), w);
    if (!first) {
      first = &w;
      c0 = std::move(wc);
    } else if (wc != c0) {
      return std::make_pair(*first, w);
    }
  }
  return std::nullopt;
}

std::map<Content, NCPoly> content_components(const NCPoly& a) {
  std::map<Content, NCPoly> parts;
  for (const auto& [w, c] : a.terms()) {
    Content wc = word_content(a.n(), w);
    auto it = parts.find(wc);
    if (it == parts.end()) it = parts.emplace(std::move(wc), NCPoly(a.m(), a.n())).first;
    it->second.accumulate(w, c);  // w is already normal
  }
  return parts;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Gen& g : w) {
    if (!first) os << "*";
    first = false;
    os << "X[" << int(g.row) << "," << int(g.col) << "]";
  }
  return os.str();
}

std::vector<PairRelation> defining_relations(int rows, int cols, int q_rows) {
  const Laurent one(1);
  const Laurent q = q_power(1, q_rows);
  const Laurent qdiff = q_power(1, q_rows) - q_power(-1, q_rows);
  std::vector<PairRelation> rels;
  auto nm = [](const char* fam, int i, int j, int k, int l) {
    return std::string(fam) + " (" + std::to_string(i) + "," + std::to_string(j) + ")x(" +
           std::to_string(k) + "," + std::to_string(l) + ")";
  };
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      for (int k = 1; k <= rows; ++k)
        for (int l = 1; l <= cols; ++l) {
          if (i == k && j < l) {
            rels.push_back({nm("row", i, j, k, l),
                            {{one, {i, j}, {k, l}}, {-q, {k, l}, {i, j}}}});
          } else if (j == l && i < k) {
            rels.push_back({nm("col", i, j, k, l),
                            {{one, {i, j}, {k, l}}, {-q, {k, l}, {i, j}}}});
          } else if (i > k && j < l) {
            rels.push_back({nm("anti", i, j, k, l),
                            {{one, {i, j}, {k, l}}, {-one, {k, l}, {i, j}}}});
          } else if (i < k && j < l) {
            rels.push_back({nm("diag", i, j, k, l),
                            {{one, {i, j}, {k, l}},
                             {-one, {k, l}, {i, j}},
                             {-qdiff, {i, l}, {k, j}}}});
          }
        }
  return rels;
}

std::string to_string(const NCPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    std::string cs = to_string(c);
    if (c.terms().size() > 1) cs = "(" + cs + ")";
    os << cs;
    if (!w.empty()) os << " * " << to_string(w);
  }
  return os.str();
}

}  // namespace qgr
