#include "doctest.h"

#include "bibucalc/fixtures.hpp"
#include "bibucalc/simplicial.hpp"
#include "oracles.hpp"

using namespace bibu;

TEST_CASE("nerve level sizes") {
  auto T = nerve(*trivial(2), 3);
  for (int n = 0; n <= 3; ++n) CHECK(T.count(n) == 2);
  auto C = nerve(*cyclic(2), 3);
  CHECK(C.count(1) == 2);
  CHECK(C.count(2) == 4);
  CHECK(C.count(3) == 8);
  CHECK(nerve(*pair(2), 2).count(2) == 8);
  CHECK(C.levels[2].label(1) == "0|1");
  for (const auto& [name, G] : standard_groupoids()) {
    INFO(name);
    auto X = nerve(*G, 3);
    CHECK(validate_sset(X).ok());
    for (int n = 0; n <= 3; ++n) CHECK(X.count(n) == oracle::chain_count(*G, n));
  }
}

TEST_CASE("face conventions") {
  auto P = poset_arrow();
  auto X = nerve(P, 2);
  int a = P.arrows().at("a");
  // a : 0 -> 1 has l = 1 and r = 0; d_0 drops vertex 0 = l
  CHECK(X.d(1, 0, a) == P.r(a));
  CHECK(X.d(1, 1, a) == P.l(a));
  CHECK(X.s(0, 0, 0) == P.unit(0));
}

TEST_CASE("broken face map fails the simplicial identities") {
  auto X = nerve(*cyclic(3), 3);
  std::swap(X.face[2][1][1], X.face[2][1][2]);
  CHECK_FALSE(validate_sset(X).ok());
  auto Y = nerve(*cyclic(3), 3);
  Y.degen[1].pop_back();
  CHECK_THROWS_AS(validate_sset(Y), StructuralError);
}

TEST_CASE("horn sets") {
  CHECK(horn_set(nerve(*cyclic(2), 3), 2, 1).size() == 4);
  CHECK(horn_set(nerve(*trivial(1), 3), 2, 0).size() == 1);
  auto X = nerve(poset_arrow(), 3);
  CHECK(horn_set(X, 2, 0).size() == 5);
  std::vector<std::pair<std::string, TruncatedSSet>> sets = {
      {"poset", X}, {"free monoid", nerve(truncated_free_monoid(), 3)}, {"Pair(2)", nerve(*pair(2), 3)},
      {"Z/2 on 3 points", nerve(*cyclic_action(2, 3), 3)}};
  for (const auto& [name, S] : sets)
    for (int n = 2; n <= 3; ++n)
      for (int i = 0; i <= n; ++i) {
        INFO(name << " " << n << " " << i);
        auto h = horn_set(S, n, i);
        auto b = oracle::horns_brute(S, n, i);
        std::sort(h.begin(), h.end());
        std::sort(b.begin(), b.end());
        CHECK(h == b);
      }
}

TEST_CASE("inner horns fill uniquely in nerves of categories") {
  std::vector<FinCategory> cats = {poset_arrow(), truncated_free_monoid(), *pair(3), *symmetric3()};
  for (const auto& C : cats) {
    auto X = nerve(C, 3);
    CHECK(kan_check(X, 2, 1, true).holds);
    CHECK(kan_check(X, 3, 1, true).holds);
    CHECK(kan_check(X, 3, 2, true).holds);
  }
}

TEST_CASE("outer horns of the poset") {
  auto X = nerve(poset_arrow(), 3);
  auto r = kan_check(X, 2, 0, false);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.fillers == 0);
  CHECK(horn_labels(X, 2, *r.witness) == std::vector<std::string>{"id1", "a"});
  CHECK_FALSE(kan_check(X, 2, 2, false).holds);
  auto F = nerve(truncated_free_monoid(), 3);
  CHECK_FALSE(kan_check(F, 2, 0, false).holds);
}

TEST_CASE("groupoid nerves satisfy every strict horn") {
  for (auto G : {cyclic(2), cyclic(3), cyclic(4), pair(2), pair(3)}) {
    auto X = nerve(*G, 3);
    for (int n = 2; n <= 3; ++n)
      for (int i = 0; i <= n; ++i) CHECK(kan_check(X, n, i, true).holds);
  }
}

TEST_CASE("classification") {
  auto c3 = classify(nerve(*cyclic(3), 3));
  CHECK(c3.groupoid);
  CHECK(c3.group_candidate());
  auto po = classify(nerve(poset_arrow(), 3));
  CHECK(po.category);
  CHECK_FALSE(po.groupoid);
  auto p2 = classify(nerve(*pair(2), 3));
  CHECK(p2.groupoid);
  CHECK_FALSE(p2.single_vertex);
  CHECK_FALSE(p2.group_candidate());
  CHECK(p2.levels == 3);
}
