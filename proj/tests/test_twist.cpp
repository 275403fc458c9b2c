#include <doctest.h>

#include <algorithm>

#include "qgrass/twist.hpp"

using namespace qgr;

namespace {

IndexSet is4(std::initializer_list<int> e) { return make_index_set(4, e); }
NCPoly mm(std::initializer_list<int> cols) { return maximal_minor(2, 4, is4(cols)); }

}  // namespace

TEST_CASE("cocycle values on generator contents at (2,4)") {
  Content x12 = x_generator_content(1, 2, 2, 4);  // last x column
  Content x22 = x_generator_content(2, 2, 2, 4);
  Content x11 = x_generator_content(1, 1, 2, 4);
  Content y = y_generator_content(2, 4);

  CHECK(cocycle_value(x12, x22) == p_power(-1));
  CHECK(cocycle_value(x12, y) == q_power(2, 2));
  CHECK(cocycle_value(x11, x12).is_one());
  CHECK(cocycle_value(y, x12).is_one());
  CHECK(cocycle_value(y, y).is_one());
  CHECK(cocycle_value(Content{0, 0, 0, 0}, x12).is_one());
}

TEST_CASE("cocycle identity on explicit triples") {
  std::vector<std::array<Content, 3>> triples;
  Content a{1, 0, 0, 2}, b{0, -1, 3, 1}, c{-2, 1, 0, -1};
  triples.push_back({a, b, c});
  triples.push_back({c, a, b});
  triples.push_back({b, b, b});
  triples.push_back({Content{0, 0, 0, 0}, a, c});
  CHECK(check_cocycle_identity(triples));
  CHECK(verify_cocycle_identity(4, 50, 7).all_ok());
  CHECK(verify_cocycle_values(2, 4).all_ok());
}

TEST_CASE("theta on maximal minors of (2,4)") {
  ThetaImage t1 = theta_minor(is4({1, 2}), 2, 4);
  CHECK(t1.set == is4({2, 3}));
  CHECK(t1.lambda.is_one());

  ThetaImage t2 = theta_minor(is4({2, 4}), 2, 4);
  CHECK(t2.set == is4({1, 3}));
  CHECK(t2.lambda == q_power(-2, 2));

  ThetaImage t3 = theta_minor(is4({1, 4}), 2, 4);
  CHECK(t3.set == is4({1, 2}));
  CHECK(t3.lambda == q_power(-2, 2));

  // the scalar is q^-2 exactly when n sits in the set
  for (const IndexSet& iset : all_m_subsets(2, 4)) {
    ThetaImage t = theta_minor(iset, 2, 4);
    CHECK(t.lambda == (iset.contains(4) ? q_power(-2, 2) : Laurent(1)));
  }

  CHECK_THROWS_AS(theta_minor(make_index_set(4, {1}), 2, 4), Error);
  CHECK_THROWS_AS(theta_minor(make_index_set(5, {1, 2}), 2, 4), Error);
}

TEST_CASE("minor_y_cocycle depends only on the last x column") {
  // phi([1,3]) at center 1 is rows {1}, cols {1}: no last column, value 1
  CHECK(minor_y_cocycle(make_index_set(2, {1}), make_index_set(2, {1}), 2, 4).is_one());
  // phi([2,4]) is rows {2}, cols {2}: hits the last column, value q^2
  CHECK(minor_y_cocycle(make_index_set(2, {2}), make_index_set(2, {2}), 2, 4) ==
        q_power(2, 2));
  CHECK(minor_y_cocycle(make_index_set(2, {}), make_index_set(2, {}), 2, 4).is_one());
  CHECK(minor_y_cocycle(make_index_set(2, {1, 2}), make_index_set(2, {1, 2}), 2, 4) ==
        q_power(2, 2));
}

TEST_CASE("twisted product rescales by the cocycle of the contents") {
  NCPoly a = mm({1, 2});
  NCPoly b = mm({3, 4});
  Laurent c = cocycle_value(minor_content(is4({1, 2})), minor_content(is4({3, 4})));
  CHECK(nc_eq(twisted_mul(a, b), nc_scale(c, nc_mul(a, b))));
  // scalars are content zero, so they multiply untwisted
  CHECK(nc_eq(twisted_mul(NCPoly::scalar(2, 4, Laurent(3)), a), nc_scale(Laurent(3), a)));
}

TEST_CASE("twisted generators obey the reflected commutation scalars") {
  CHECK(verify_twisted_qmatrix(2, 4).all_ok());
  CHECK(verify_z_model(2, 4).all_ok());

  // y' x'[i,j] = q x'[i,j] y' except in the last column, where q flips
  Localized x11 = dehom_x(1, 1, 1, 2, 4);
  Localized x12 = dehom_x(1, 2, 1, 2, 4);
  Localized yloc{2, 4, 1, 0, consecutive_minor(1, 2, 4)};
  CHECK(loc_eq(twisted_mul(yloc, x11), loc_scale(q_power(1, 2), twisted_mul(x11, yloc))));
  CHECK(loc_eq(twisted_mul(yloc, x12), loc_scale(q_power(-1, 2), twisted_mul(x12, yloc))));
}

TEST_CASE("twisting a minor of the x algebra is the identity on minors") {
  for (int sz : {1, 2}) {
    std::vector<IndexSet> rsets = all_m_subsets(sz, 2);
    for (const IndexSet& r : rsets)
      for (const IndexSet& c : rsets) {
        TwistedMinor tw = twist_of_minor(r, c, 2, 4);
        CAPTURE(pair_to_string(r, c));
        CHECK(tw.equal);
        CHECK(tw.steps_trivial);
      }
  }
  TwistedMinor tw25 = twist_of_minor(make_index_set(2, {1, 2}), make_index_set(3, {1, 3}), 2, 5);
  CHECK(tw25.equal);
  CHECK(tw25.steps_trivial);
}

TEST_CASE("composite factorization for each maximal minor of (2,4)") {
  for (const IndexSet& iset : all_m_subsets(2, 4)) {
    Report rep = verify_composite(iset, 2, 4);
    CAPTURE(to_string(iset));
    CHECK(rep.all_ok());
    CHECK(rep.checks.size() == 4);
  }
  CHECK(verify_composite(2, 4).all_ok());
}

TEST_CASE("theta transport of the quadratic relations") {
  CHECK(verify_theta_transport(2, 4).all_ok());
}

TEST_CASE("twisted associativity spot checks") {
  CHECK(verify_twisted_associativity(2, 4, 10, 11).all_ok());
}

TEST_CASE("cycling minor sets") {
  auto ms = [](std::initializer_list<std::initializer_list<int>> sets) {
    MinorSet s;
    for (auto e : sets) s.insert(make_index_set(4, e));
    return s;
  };
  CHECK(cycle_minor_set(ms({{1, 2}})) == ms({{2, 3}}));
  CHECK(cycle_minor_set(ms({{1, 2}, {1, 3}, {1, 4}})) == ms({{2, 3}, {2, 4}, {1, 2}}));

  MinorSet full;
  for (const IndexSet& iset : all_m_subsets(2, 4)) full.insert(iset);
  CHECK(cycle_minor_set(full) == full);

  MinorSet iter = ms({{1, 4}});
  for (int k = 0; k < 4; ++k) iter = cycle_minor_set(iter);
  CHECK(iter == ms({{1, 4}}));

  CHECK(verify_theta_cycle(2, 4).all_ok());
}

TEST_CASE("domain probe with and without quotients") {
  auto clean = domain_probe(2, 4, {}, 2, 5);
  CHECK(!clean.degenerate);
  CHECK(clean.zero_divisors.empty());
  CHECK(clean.pairs_scanned > 0);

  std::vector<IndexSet> all;
  for (const IndexSet& iset : all_m_subsets(2, 4)) all.push_back(iset);
  CHECK(domain_probe(2, 4, all, 2, 5).degenerate);

  auto probed = domain_probe(2, 4, {is4({1, 3})}, 2, 5);
  CHECK(std::find(probed.zero_divisors.begin(), probed.zero_divisors.end(),
                  "[1,4] * [2,3]") != probed.zero_divisors.end());

  auto shallow = domain_probe(2, 4, {}, 1, 5);
  CHECK(!shallow.degenerate);
  CHECK(shallow.pairs_scanned == 0);

  CHECK_THROWS_AS(domain_probe(2, 4, {}, 0, 5), Error);
  CHECK_THROWS_AS(domain_probe(2, 4, {}, 3, 5), Error);

  CHECK(verify_domain_probe(2, 4, 2, 5).all_ok());
}
