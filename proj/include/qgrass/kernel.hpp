#pragma once

/**
 * @file kernel.hpp
 * @brief Fraction-free linear algebra over the Laurent scalars.
 *
 * Everything here stays inside Z[t, t^-1]: elimination is Bareiss-Jordan
 * (two-sided fraction-free reduction with exact divisions), so no rational
 * functions and no polynomial gcds are ever needed. Kernel vectors are exact:
 * M * v = 0 holds in the ring.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "qgrass/laurent.hpp"

namespace qgr {

struct ScalarMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Laurent> a;  // row-major

  ScalarMatrix() = default;
  ScalarMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Laurent& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Laurent& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Scale a vector to its canonical form: divide out the greatest common
/// monomial factor (integer gcd times the smallest shared power of t), then
/// flip signs so the first nonzero entry has a positive trailing coefficient.
void canonicalize_vector(std::vector<Laurent>& v);

/// Basis of the right kernel { v : M v = 0 }, each vector canonicalized.
/// Deterministic: vectors are emitted in order of their free column.
std::vector<std::vector<Laurent>> kernel_basis(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);

/// Is v in the row span of m (over the fraction field)?
bool in_row_span(const ScalarMatrix& m, const std::vector<Laurent>& v);

/// Solve A x = rhs over the fraction field, returned fraction-free as
/// (numerators, denominator) with A * num = den * rhs exactly. Free variables
/// are set to zero. nullopt when the system is inconsistent.
struct FfSolution {
  std::vector<Laurent> num;
  Laurent den;
};
std::optional<FfSolution> solve_fraction_free(const ScalarMatrix& a, const std::vector<Laurent>& rhs);

}  // namespace qgr
