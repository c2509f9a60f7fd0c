#include "doctest.h"

#include "bibucalc/fixtures.hpp"
#include "bibucalc/linking.hpp"
#include "oracles.hpp"

using namespace bibu;

TEST_CASE("linking category of Id_Cyc(2)") {
  auto L = linking_category(identity_bibundle(cyclic(2)));
  CHECK(L.cat.num_objects() == 2);
  CHECK(L.cat.num_arrows() == 6);
  CHECK(validate_category(L.cat).ok());
  CHECK(L.cat.arrows().label(2) == "M:0");
  CHECK(L.is_m_arrow(2));
  CHECK(L.is_h_object(1));
}

TEST_CASE("M-arrows of eps_G are its objects") {
  auto G = cyclic_action(3, 4);
  auto L = linking_category(terminal_morphism(G));
  CHECK(L.m_arrows == 4);
  CHECK(validate_category(L.cat).ok());
}

TEST_CASE("actions are read back exactly") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    auto G = random_groupoid(rng, 8), H = random_groupoid(rng, 8);
    auto M = random_bibundle(rng, G, H, 12);
    CHECK(bibundle_from_linking(linking_category(M), G, H) == M);
  }
}

TEST_CASE("a broken action shows up as a category failure") {
  auto M = identity_bibundle(symmetric3());
  M.set_right(1, 2, 1);
  CHECK_FALSE(validate_category(linking_category(M).cat).ok());
}

TEST_CASE("principality through the linking category") {
  auto id = principality_via_linking(identity_bibundle(pair(2)), Side::Right);
  CHECK(id.all());
  auto c = principality_via_linking(cv(cyclic(2)), Side::Right);
  CHECK_FALSE(c.p2);
  CHECK_FALSE(c.w2.empty());

  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    auto G = random_groupoid(rng, 8), H = random_groupoid(rng, 8);
    auto M = random_bibundle(rng, G, H, 12);
    for (Side s : {Side::Right, Side::Left}) CHECK(oracle::flags_of(principality_via_linking(M, s)) == oracle::principal(M, s));
  }
}

TEST_CASE("linking groupoids") {
  auto L = linking_groupoid(identity_bibundle(cyclic(2)));
  REQUIRE(L.groupoid);
  CHECK(L.groupoid->num_objects() == 2);
  CHECK(L.groupoid->num_arrows() == 8);
  CHECK(validate_groupoid(*L.groupoid).ok());

  auto P = linking_groupoid(terminal_morphism(pair(2)));
  REQUIRE(P.groupoid);
  CHECK(validate_groupoid(*P.groupoid).ok());
  CHECK(groupoids_isomorphic(*full_subgroupoid(P.groupoid, {2}), *trivial(1)));
  CHECK(groupoids_isomorphic(*full_subgroupoid(P.groupoid, {0, 1}), *pair(2)));

  auto no = linking_groupoid(bundlize(GroupoidHom{cyclic(4), cyclic(2), {0}, {0, 1, 0, 1}}));
  CHECK_FALSE(no.groupoid);
  CHECK(no.right.all());
  CHECK_FALSE(no.left.p2);
}
