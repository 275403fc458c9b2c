#pragma once

/**
 * @file minors.hpp
 * @brief Index sets, quantum minors, consecutive column sets, cyclic shifts.
 *
 * The quantum minor on rows I = {i_1 < ... < i_t} and columns
 * J = {j_1 < ... < j_t} is
 *
 *   [I|J] = sum over permutations s of (-q)^(inv s) X[i_s(1),j_1] ... X[i_s(t),j_t]
 *
 * with inv s the inversion count. A maximal minor [J] takes all m rows; these
 * generate the homogeneous coordinate ring of the quantum Grassmannian inside
 * the quantum matrix algebra.
 */

#include <string>
#include <vector>

#include "qgrass/qmatrix.hpp"

namespace qgr {

struct IndexSet {
  int n = 0;                // indices live in 1..n
  std::vector<int> elems;   // strictly increasing

  bool contains(int j) const;
  std::size_t size() const { return elems.size(); }
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
};

/// Validates bounds and strict monotonicity.
IndexSet make_index_set(int n, std::vector<int> elems);

/// Representative of j modulo n inside 1..n.
int tilde(int j, int n);

/// { tilde(alpha), ..., tilde(alpha+m-1) }, sorted. Wraps past n.
IndexSet consecutive_set(int alpha, int m, int n);

struct CycledSet {
  IndexSet set;
  bool crossed;  // did the shift move an index past n back to 1
};

/// j -> tilde(j+1) applied elementwise.
CycledSet cycle_index_set(const IndexSet& j);

/// Indicator vector of the column set, as a Z^n content.
Content minor_content(const IndexSet& cols);

NCPoly quantum_minor(int m, int n, const IndexSet& rows, const IndexSet& cols);

/// [J] = [{1..m} | J]; requires |J| = m.
NCPoly maximal_minor(int m, int n, const IndexSet& cols);

/// [consecutive_set(alpha, m, n)]
NCPoly consecutive_minor(int alpha, int m, int n);

IndexSet set_union_disjoint(const IndexSet& a, const IndexSet& b);
IndexSet set_minus(const IndexSet& a, const IndexSet& b);  // b must be a subset
IndexSet complement(const IndexSet& a);

std::string to_string(const IndexSet& s);                          // "[1,3]"
std::string pair_to_string(const IndexSet& rows, const IndexSet& cols);  // "[{1,2}|{2,4}]"

}  // namespace qgr
