#include <doctest.h>

#include "qgrass/qmatrix.hpp"
#include "qgrass/error.hpp"

using namespace qgr;

namespace {

NCPoly X(int i, int j) { return NCPoly::gen(2, 2, i, j); }
Word w(std::initializer_list<std::pair<int, int>> gens) {
  Word r;
  for (auto [i, j] : gens) r.push_back({std::uint8_t(i), std::uint8_t(j)});
  return r;
}

}  // namespace

TEST_CASE("normal form of each descending pair, 2x2 with q = t^2") {
  Laurent q = q_power(1, 2);
  Laurent qi = q_power(-1, 2);

  // same row: X12 X11 = q^-1 X11 X12
  CHECK(normalize_word(2, 2, w({{1, 2}, {1, 1}})) ==
        nc_scale(qi, nc_mul(X(1, 1), X(1, 2))));
  // same column: X21 X11 = q^-1 X11 X21
  CHECK(normalize_word(2, 2, w({{2, 1}, {1, 1}})) ==
        nc_scale(qi, nc_mul(X(1, 1), X(2, 1))));
  // antidiagonal pair commutes: X21 X12 = X12 X21
  CHECK(normalize_word(2, 2, w({{2, 1}, {1, 2}})) == nc_mul(X(1, 2), X(2, 1)));
  // diagonal pair picks up the correction term
  CHECK(normalize_word(2, 2, w({{2, 2}, {1, 1}})) ==
        nc_sub(nc_mul(X(1, 1), X(2, 2)),
               nc_scale(q - qi, nc_mul(X(1, 2), X(2, 1)))));
}

TEST_CASE("normal words pass through untouched") {
  Word ascending = w({{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  NCPoly p = normalize_word(2, 2, ascending);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms().begin()->first == ascending);
  CHECK(p.terms().begin()->second.is_one());
}

TEST_CASE("the four defining relation families all evaluate to zero") {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    for (const PairRelation& r : defining_relations(m, n, m)) {
      NCPoly acc = NCPoly::zero(m, n);
      for (const auto& t : r.terms)
        acc = nc_add(acc, nc_scale(t.coeff,
                                   nc_mul(NCPoly::gen(m, n, t.g1.first, t.g1.second),
                                          NCPoly::gen(m, n, t.g2.first, t.g2.second))));
      CAPTURE(r.name);
      CHECK(acc.is_zero());
    }
  }
  // family count at (2,2): 2 row + 2 column + 1 antidiagonal + 1 diagonal
  CHECK(defining_relations(2, 2, 2).size() == 6);
}

TEST_CASE("associativity on a scrambled cube of generators") {
  NCPoly a = nc_add(X(2, 2), nc_scale(Laurent::term(1, -1), X(1, 1)));
  NCPoly b = nc_sub(X(2, 1), X(1, 2));
  NCPoly c = nc_add(X(1, 2), X(2, 2));
  CHECK(nc_eq(nc_mul(nc_mul(a, b), c), nc_mul(a, nc_mul(b, c))));
}

TEST_CASE("content bookkeeping") {
  CHECK(word_content(4, w({{1, 1}, {1, 2}})) == Content{1, 1, 0, 0});
  CHECK(word_content(4, {}) == Content{0, 0, 0, 0});

  NCPoly hom = nc_mul(NCPoly::gen(2, 4, 1, 1), NCPoly::gen(2, 4, 2, 2));
  auto cc = column_content(hom);
  REQUIRE(cc.has_value());
  CHECK(*cc == Content{1, 1, 0, 0});
  CHECK(!inhomogeneity_witness(hom).has_value());

  NCPoly mixed = nc_add(NCPoly::gen(2, 4, 1, 1), NCPoly::gen(2, 4, 1, 3));
  CHECK(!column_content(mixed).has_value());
  CHECK(inhomogeneity_witness(mixed).has_value());
  auto comps = content_components(mixed);
  CHECK(comps.size() == 2);
  CHECK(comps.count(Content{1, 0, 0, 0}) == 1);
  CHECK(comps.count(Content{0, 0, 1, 0}) == 1);

  CHECK_THROWS_AS(column_content(NCPoly::zero(2, 4)), Error);
}

TEST_CASE("rewrite step cap aborts runaway normalization") {
  set_rewrite_step_cap(1);
  Word descending = w({{2, 2}, {2, 1}, {1, 2}, {1, 1}});
  CHECK_THROWS_AS(normalize_word(2, 2, descending), Error);
  set_rewrite_step_cap(0);
  CHECK(!normalize_word(2, 2, descending).is_zero());
}

TEST_CASE("mixed ambient sizes are rejected") {
  CHECK_THROWS_AS(nc_add(NCPoly::gen(2, 2, 1, 1), NCPoly::gen(2, 3, 1, 1)), Error);
  CHECK_THROWS_AS(NCPoly::gen(2, 2, 3, 1), Error);
  CHECK_THROWS_AS(NCPoly::gen(2, 2, 1, 0), Error);
}

TEST_CASE("printing is stable") {
  CHECK(to_string(X(1, 1)) == "1*t^0 * X[1,1]");
  CHECK(to_string(NCPoly::zero(2, 2)) == "0");
  CHECK(to_string(nc_mul(X(1, 1), X(2, 1))) == "1*t^0 * X[1,1]*X[2,1]");
}
