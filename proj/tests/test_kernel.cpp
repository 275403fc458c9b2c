#include <doctest.h>

#include "qgrass/kernel.hpp"

using namespace qgr;

namespace {

Laurent lt(long c, long e) { return Laurent::term(c, e); }

ScalarMatrix from_rows(const std::vector<std::vector<Laurent>>& rows) {
  ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("canonicalize_vector strips the common monomial and fixes sign") {
  std::vector<Laurent> v = {lt(2, 2), lt(-4, 3)};
  canonicalize_vector(v);
  CHECK(v[0] == Laurent(1));
  CHECK(v[1] == lt(-2, 1));

  std::vector<Laurent> w = {Laurent(0), lt(-3, -1), lt(6, 0)};
  canonicalize_vector(w);
  CHECK(w[0].is_zero());
  CHECK(w[1] == Laurent(1));
  CHECK(w[2] == lt(-2, 1));
}

TEST_CASE("kernel_basis on a 1x2 row") {
  // (1, q) has kernel spanned by (q, -1) up to canonical scaling
  ScalarMatrix m = from_rows({{Laurent(1), lt(1, 2)}});
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  // check it really is a kernel vector
  CHECK((m.at(0, 0) * basis[0][0] + m.at(0, 1) * basis[0][1]).is_zero());
}

TEST_CASE("kernel of a rank-1 2x2 matrix is one dimensional") {
  ScalarMatrix m = from_rows({{Laurent(1), lt(1, 1)}, {lt(1, 1), lt(1, 2)}});
  CHECK(rank(m) == 1);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  for (std::size_t r = 0; r < 2; ++r)
    CHECK((m.at(r, 0) * basis[0][0] + m.at(r, 1) * basis[0][1]).is_zero());
}

TEST_CASE("full rank matrix has trivial kernel") {
  ScalarMatrix m = from_rows({{Laurent(1), lt(1, 1)}, {Laurent(0), lt(1, 2)}});
  CHECK(rank(m) == 2);
  CHECK(kernel_basis(m).empty());
}

TEST_CASE("in_row_span over the fraction field") {
  ScalarMatrix m = from_rows({{Laurent(1), lt(1, 1), Laurent(0)},
                              {Laurent(0), Laurent(1), lt(1, -1)}});
  // 2*row0 + t*row1 scaled arbitrarily
  std::vector<Laurent> v = {Laurent(2), lt(2, 1) + lt(1, 1), Laurent(1)};
  CHECK(in_row_span(m, v));
  CHECK(!in_row_span(m, {Laurent(1), Laurent(0), Laurent(0)}));
  CHECK(in_row_span(m, {Laurent(0), Laurent(0), Laurent(0)}));
}

TEST_CASE("solve_fraction_free returns A*num = den*rhs") {
  ScalarMatrix a = from_rows({{Laurent(1), Laurent(1)},
                              {Laurent(0), lt(1, 1)}});
  std::vector<Laurent> rhs = {lt(1, 1), Laurent(1)};
  auto sol = solve_fraction_free(a, rhs);
  REQUIRE(sol.has_value());
  CHECK(!sol->den.is_zero());
  for (std::size_t r = 0; r < a.rows; ++r) {
    Laurent acc(0);
    for (std::size_t c = 0; c < a.cols; ++c) acc = acc + a.at(r, c) * sol->num[c];
    CHECK(acc == sol->den * rhs[r]);
  }
}

TEST_CASE("solve_fraction_free detects inconsistency") {
  ScalarMatrix a = from_rows({{Laurent(1), Laurent(1)},
                              {Laurent(2), Laurent(2)}});
  CHECK(!solve_fraction_free(a, {Laurent(1), Laurent(3)}).has_value());
  CHECK(solve_fraction_free(a, {Laurent(1), Laurent(2)}).has_value());
}
