#include "qgrass/minors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qgr {

bool IndexSet::contains(int j) const {
  return std::binary_search(elems.begin(), elems.end(), j);
}

IndexSet make_index_set(int n, std::vector<int> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n)
      fail(Err::IndexOutOfRange, "index " + std::to_string(elems[i]) + " outside 1.." + std::to_string(n));
    if (i > 0 && elems[i - 1] >= elems[i])
      fail(Err::IndexOutOfRange, "index set must be strictly increasing");
  }
  return IndexSet{n, std::move(elems)};
}

int tilde(int j, int n) {
  int r = j % n;
  if (r <= 0) r += n;
  return r;
}

IndexSet consecutive_set(int alpha, int m, int n) {
  if (m < 1 || m >= n) fail(Err::InvalidConfig, "need 1 <= m < n");
  std::vector<int> e(m);
  for (int k = 0; k < m; ++k) e[k] = tilde(alpha + k, n);
  std::sort(e.begin(), e.end());
  return IndexSet{n, std::move(e)};
}

CycledSet cycle_index_set(const IndexSet& j) {
  bool crossed = j.contains(j.n);
  std::vector<int> e;
  e.reserve(j.elems.size());
  for (int x : j.elems) e.push_back(tilde(x + 1, j.n));
  std::sort(e.begin(), e.end());
  return CycledSet{IndexSet{j.n, std::move(e)}, crossed};
}

Content minor_content(const IndexSet& cols) {
  Content c(cols.n, 0);
  for (int j : cols.elems) c[j - 1] += 1;
  return c;
}

namespace {

long inversions(const std::vector<int>& p) {
  long inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = i + 1; k < p.size(); ++k)
      if (p[i] > p[k]) ++inv;
  return inv;
}

}  // namespace

NCPoly quantum_minor(int m, int n, const IndexSet& rows, const IndexSet& cols) {
  if (rows.n != m || cols.n != n)
    fail(Err::AmbientMismatch, "index set ambients disagree with the algebra");
  if (rows.size() != cols.size()) fail(Err::WrongCardinality, "minor needs |rows| = |cols|");
  for (int i : rows.elems)
    if (i < 1 || i > m) fail(Err::IndexOutOfRange, "row index outside 1..m");
  for (int j : cols.elems)
    if (j < 1 || j > n) fail(Err::IndexOutOfRange, "column index outside 1..n");
  const std::size_t t = rows.size();
  NCPoly r(m, n);
  if (t == 0) return NCPoly::one(m, n);
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Word w(t);
    for (std::size_t k = 0; k < t; ++k)
      w[k] = Gen{std::uint8_t(rows.elems[perm[k]]), std::uint8_t(cols.elems[k])};
    long inv = inversions(perm);
    Laurent c = Laurent::term((inv % 2 == 0) ? Int(1) : Int(-1), inv * m);  // (-q)^inv
    r.accumulate(w, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

NCPoly maximal_minor(int m, int n, const IndexSet& cols) {
  if (int(cols.size()) != m)
    fail(Err::WrongCardinality, "maximal minor needs " + std::to_string(m) + " columns");
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 1);
  return quantum_minor(m, n, IndexSet{m, std::move(all)}, cols);
}

NCPoly consecutive_minor(int alpha, int m, int n) {
  return maximal_minor(m, n, consecutive_set(alpha, m, n));
}

IndexSet set_union_disjoint(const IndexSet& a, const IndexSet& b) {
  if (a.n != b.n) fail(Err::AmbientMismatch, "index sets in different ambients");
  std::vector<int> e;
  e.reserve(a.elems.size() + b.elems.size());
  std::merge(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(e));
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] == e[i]) fail(Err::PrereqViolation, "index sets are not disjoint");
  return IndexSet{a.n, std::move(e)};
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  if (a.n != b.n) fail(Err::AmbientMismatch, "index sets in different ambients");
  std::vector<int> e;
  for (int x : a.elems)
    if (!b.contains(x)) e.push_back(x);
  if (e.size() != a.elems.size() - b.elems.size())
    fail(Err::PrereqViolation, "set difference needs a subset");
  return IndexSet{a.n, std::move(e)};
}

IndexSet complement(const IndexSet& a) {
  std::vector<int> e;
  for (int x = 1; x <= a.n; ++x)
    if (!a.contains(x)) e.push_back(x);
  return IndexSet{a.n, std::move(e)};
}

std::string to_string(const IndexSet& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    if (i) os << ",";
    os << s.elems[i];
  }
  os << "]";
  return os.str();
}

std::string pair_to_string(const IndexSet& rows, const IndexSet& cols) {
  auto braces = [](const IndexSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.elems.size(); ++i) {
      if (i) r += ",";
      r += std::to_string(s.elems[i]);
    }
    return r + "}";
  };
  return "[" + braces(rows) + "|" + braces(cols) + "]";
}

}  // namespace qgr
