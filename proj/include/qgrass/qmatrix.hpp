#pragma once

/**
 * @file qmatrix.hpp
 * @brief The quantum m x n matrix algebra and its PBW normal form.
 *
 * Generators X[i,j] (1 <= i <= m, 1 <= j <= n) with q = t^m and relations
 *
 *   X[i,j] X[i,l] = q X[i,l] X[i,j]                     (j < l, same row)
 *   X[i,j] X[k,j] = q X[k,j] X[i,j]                     (i < k, same column)
 *   X[i,j] X[k,l] = X[k,l] X[i,j]                       (i > k, j < l)
 *   X[i,j] X[k,l] = X[k,l] X[i,j] + (q - q^-1) X[i,l] X[k,j]   (i < k, j < l)
 *
 * Monomials with factors nondecreasing in the lexicographic order on (row,
 * col) form a basis. An NCPoly is stored in that basis: a map from normal
 * words to nonzero Laurent coefficients.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/laurent.hpp"

namespace qgr {

struct Gen {
  std::uint8_t row = 0, col = 0;  // 1-based
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Product of generators, left to right. Normal iff nondecreasing.
using Word = std::vector<Gen>;

/// Column multiplicity vector in Z^n.
using Content = std::vector<long>;

class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(int m, int n) : m_(m), n_(n) {}

  static NCPoly zero(int m, int n) { return NCPoly(m, n); }
  static NCPoly one(int m, int n);
  static NCPoly scalar(int m, int n, const Laurent& c);
  static NCPoly gen(int m, int n, int i, int j);

  int m() const { return m_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Laurent>& terms() const { return terms_; }

  /// Adds c * w to the term map, normalizing w first. Internal building block.
  void accumulate(const Word& w, const Laurent& c);

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int m_ = 0, n_ = 0;
  std::map<Word, Laurent> terms_;

  friend NCPoly nc_add(const NCPoly&, const NCPoly&);
  friend NCPoly nc_sub(const NCPoly&, const NCPoly&);
  friend NCPoly nc_scale(const Laurent&, const NCPoly&);
  friend NCPoly nc_mul(const NCPoly&, const NCPoly&);
};

NCPoly nc_add(const NCPoly& a, const NCPoly& b);
NCPoly nc_sub(const NCPoly& a, const NCPoly& b);
NCPoly nc_scale(const Laurent& c, const NCPoly& a);
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);
bool nc_eq(const NCPoly& a, const NCPoly& b);

/// Rewrites an arbitrary word into the normal basis; primarily for tests.
/// The rewriting worklist is bounded by a step cap (default is generous);
/// exceeding it throws RewriteCapExceeded.
NCPoly normalize_word(int m, int n, const Word& w, const Laurent& c = Laurent(1));

std::uint64_t rewrite_step_cap();
void set_rewrite_step_cap(std::uint64_t cap);  // 0 restores the default

Content word_content(int n, const Word& w);

/// The common per-column content of all words, if a is homogeneous.
/// Errors on the zero element; returns nullopt when inhomogeneous.
std::optional<Content> column_content(const NCPoly& a);

/// Two words of differing content, when a is inhomogeneous.
std::optional<std::pair<Word, Word>> inhomogeneity_witness(const NCPoly& a);

/// Split into content-homogeneous summands, keyed by content.
std::map<Content, NCPoly> content_components(const NCPoly& a);

std::string to_string(const Word& w);
std::string to_string(const NCPoly& a);

/// One defining relation, written as sum of coeff * g1 * g2 = 0 over
/// generator indices in an (rows x cols) grid. Kept symbolic so the same
/// list can be evaluated over X generators, dehomogenised generators, or
/// their twisted images.
struct PairRelation {
  struct Term {
    Laurent coeff;
    std::pair<int, int> g1, g2;
  };
  std::string name;
  std::vector<Term> terms;
};

/// The four relation families of the quantum (rows x cols) matrix algebra,
/// with q = t^q_rows. Every valid index instance appears once.
std::vector<PairRelation> defining_relations(int rows, int cols, int q_rows);

}  // namespace qgr
