#include <doctest.h>

#include <vector>

#include "qgrass/minors.hpp"

using namespace qgr;

namespace {

IndexSet is4(std::initializer_list<int> e) { return make_index_set(4, e); }

}  // namespace

TEST_CASE("index sets validate their input") {
  CHECK(is4({1, 3}).contains(3));
  CHECK(!is4({1, 3}).contains(2));
  CHECK(is4({}).size() == 0);
  CHECK_THROWS_AS(make_index_set(4, {0, 1}), Error);
  CHECK_THROWS_AS(make_index_set(4, {1, 5}), Error);
  CHECK_THROWS_AS(make_index_set(4, {2, 2}), Error);
  CHECK_THROWS_AS(make_index_set(4, {3, 1}), Error);
}

TEST_CASE("tilde wraps into 1..n") {
  CHECK(tilde(5, 4) == 1);
  CHECK(tilde(4, 4) == 4);
  CHECK(tilde(0, 4) == 4);
  CHECK(tilde(-1, 4) == 3);
  CHECK(tilde(9, 4) == 1);
}

TEST_CASE("consecutive sets wrap around n") {
  CHECK(consecutive_set(1, 2, 4) == is4({1, 2}));
  CHECK(consecutive_set(3, 2, 4) == is4({3, 4}));
  CHECK(consecutive_set(4, 2, 4) == is4({1, 4}));
  CHECK(consecutive_set(3, 3, 4) == is4({1, 3, 4}));
}

TEST_CASE("cycling an index set reports wraparound") {
  auto c1 = cycle_index_set(is4({1, 2}));
  CHECK(c1.set == is4({2, 3}));
  CHECK(!c1.crossed);
  auto c2 = cycle_index_set(is4({1, 4}));
  CHECK(c2.set == is4({1, 2}));
  CHECK(c2.crossed);
  auto c3 = cycle_index_set(is4({3, 4}));
  CHECK(c3.set == is4({1, 4}));
  CHECK(c3.crossed);
}

TEST_CASE("set algebra") {
  CHECK(complement(is4({1, 3})) == is4({2, 4}));
  CHECK(complement(is4({})) == is4({1, 2, 3, 4}));
  CHECK(set_minus(is4({1, 2, 3}), is4({2})) == is4({1, 3}));
  CHECK(set_union_disjoint(is4({1, 4}), is4({2})) == is4({1, 2, 4}));
  CHECK_THROWS_AS(set_union_disjoint(is4({1, 2}), is4({2, 3})), Error);
  CHECK_THROWS_AS(set_minus(is4({1}), is4({2})), Error);
  CHECK_THROWS_AS(set_minus(is4({1}), make_index_set(5, {1})), Error);
}

TEST_CASE("minor content counts column membership") {
  CHECK(minor_content(is4({1, 3})) == Content{1, 0, 1, 0});
  CHECK(minor_content(is4({})) == Content{0, 0, 0, 0});
}

TEST_CASE("2x2 quantum minor in normal form") {
  NCPoly expected = nc_sub(
      nc_mul(NCPoly::gen(2, 4, 1, 1), NCPoly::gen(2, 4, 2, 2)),
      nc_scale(q_power(1, 2), nc_mul(NCPoly::gen(2, 4, 1, 2), NCPoly::gen(2, 4, 2, 1))));
  CHECK(quantum_minor(2, 4, make_index_set(2, {1, 2}), is4({1, 2})) == expected);
  CHECK(maximal_minor(2, 4, is4({1, 2})) == expected);
}

TEST_CASE("row and column expansions of the 3x3 quantum determinant agree") {
  // quantum_minor sums over row permutations; the column-permutation sum
  // must produce the same element.
  std::vector<std::vector<int>> perms = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                         {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  NCPoly byCols = NCPoly::zero(3, 3);
  for (const auto& s : perms) {
    int inv = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (s[a] > s[b]) ++inv;
    Word w;
    for (int r = 1; r <= 3; ++r)
      w.push_back({std::uint8_t(r), std::uint8_t(s[r - 1])});
    byCols = nc_add(byCols, normalize_word(3, 3, w, Laurent::term(inv % 2 ? -1 : 1, 3L * inv)));
  }
  auto all3 = make_index_set(3, {1, 2, 3});
  CHECK(quantum_minor(3, 3, all3, all3) == byCols);
}

TEST_CASE("1x1 minors are bare generators") {
  CHECK(quantum_minor(2, 4, make_index_set(2, {2}), is4({3})) == NCPoly::gen(2, 4, 2, 3));
}

TEST_CASE("consecutive minors name their column set") {
  CHECK(consecutive_minor(1, 2, 4) == maximal_minor(2, 4, is4({1, 2})));
  CHECK(consecutive_minor(4, 2, 4) == maximal_minor(2, 4, is4({1, 4})));
}

TEST_CASE("minor argument validation") {
  CHECK_THROWS_AS(quantum_minor(2, 4, make_index_set(2, {1}), is4({1, 2})), Error);
  CHECK_THROWS_AS(maximal_minor(2, 4, make_index_set(5, {1, 2})), Error);
}

TEST_CASE("set printing formats") {
  CHECK(to_string(is4({1, 3})) == "[1,3]");
  CHECK(to_string(is4({})) == "[]");
  CHECK(pair_to_string(make_index_set(2, {1, 2}), is4({2, 4})) == "[{1,2}|{2,4}]");
}
