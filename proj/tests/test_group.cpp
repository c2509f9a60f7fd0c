#include "doctest.h"

#include "bibucalc/fixtures.hpp"
#include "bibucalc/group.hpp"

using namespace bibu;

namespace {

// A nontrivial automorphism of B, or none.
std::optional<IsoWitness> nontrivial_auto(const Bibundle& B) {
  for (const auto& W : find_all_isos(B, B, 8))
    if (W != identity_witness(B)) return W;
  return std::nullopt;
}

}  // namespace

TEST_CASE("crossed modules") {
  auto full = two_group_from_crossed_module({cyclic(2), {true, true}});
  CHECK(groupoids_isomorphic(*full.base, *pair(2)));
  CHECK(evaluate("cv ; (eps * eps)", full.env()).size() == 1);

  auto none = two_group_from_crossed_module({cyclic(4), {true, false, false, false}});
  CHECK(groupoids_isomorphic(*none.base, *trivial(4)));

  auto half = two_group_from_crossed_module({cyclic(4), {true, false, true, false}});
  CHECK(half.base->num_objects() == 4);
  CHECK(half.base->num_arrows() == 8);
  CHECK(check_monoid(half).ok());
  CHECK(check_group(half).group);

  // {e, s} is not normal in S3
  CrossedModuleIncl bad{symmetric3(), {true, true, false, false, false, false}};
  CHECK_FALSE(validate_crossed_module(bad).ok());
  CHECK_THROWS_AS(two_group_from_crossed_module(bad), StructuralError);
  CHECK_THROWS_AS(kronecker_finite(6, 4), StructuralError);
}

TEST_CASE("structure homomorphisms are functors") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 2}, {6, 3}, {8, 4}}) {
    auto D = kronecker_finite(n, q);
    CrossedModuleIncl cm{cyclic(n), {}};
    for (int k = 0; k < n; ++k) cm.in_A.push_back(k % q == 0);
    auto h = crossed_module_homs(cm, D.base);
    CHECK(check_hom(h.mult).ok());
    CHECK(check_hom(h.unit).ok());
    CHECK(check_hom(h.inverse).ok());
  }
}

TEST_CASE("kronecker fixtures") {
  auto plain = kronecker_finite(5, 5);
  CHECK(plain.base->num_arrows() == 5);
  CHECK(plain.base->num_objects() == 5);
  CHECK(kronecker_finite(6, 2).mu.size() == 108);
  auto D = kronecker_finite(4, 2);
  auto m = check_monoid(D);
  CHECK(m.ok());
  CHECK(D.ass);
  CHECK(D.luni);
  CHECK(D.runi);
  CHECK(check_group(D).group);
}

TEST_CASE("plain groups") {
  for (int n = 2; n <= 5; ++n) {
    auto D = abelian_group_stack(cyclic(n));
    CHECK(check_monoid(D).ok());
    CHECK(check_bimonoid(D).ok());
    auto g = check_group(D);
    CHECK(g.group);
    CHECK(g.left_antipode == true);
    CHECK(g.right_antipode == true);
    GroupoidHom neg{cyclic(n), cyclic(n), {0}, {}};
    for (int k = 0; k < n; ++k) neg.f1.push_back((n - k) % n);
    CHECK(isomorphic(preinverse(D), bundlize(neg)));
  }
  CHECK_THROWS_AS(abelian_group_stack(symmetric3()), StructuralError);
}

TEST_CASE("corrupted multiplication loses associativity") {
  auto D = abelian_group_stack(cyclic(3));
  REQUIRE(check_monoid(D).ok());
  // swap two right-action entries at one point
  auto& mu = D.mu;
  int a = mu.act_right(0, 1), b = mu.act_right(0, 2);
  mu.set_right(0, 1, b);
  mu.set_right(0, 2, a);
  CHECK_FALSE(check_monoid(D).ass);
}

TEST_CASE("bimonoid laws") {
  auto D = kronecker_finite(6, 3);
  CHECK(check_bimonoid(D).ok());
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {6, 2}}) CHECK(check_bimonoid(kronecker_finite(n, q)).mu_counit);
}

TEST_CASE("preinverse") {
  auto D = kronecker_finite(4, 2);
  CHECK(isomorphic(preinverse(D), *D.i));
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {6, 2}, {6, 3}}) {
    auto K = kronecker_finite(n, q);
    CHECK(check_group(K).group);
  }
}

TEST_CASE("a monoid that is not a group") {
  auto D = and_monoid();
  CHECK(check_monoid(D).ok());
  auto g = check_group(D);
  CHECK_FALSE(g.group);
  CHECK_FALSE(is_weak_isomorphism(preinverse(D)).weak_iso);
  CHECK_FALSE((g.s_right.all() && g.s_left.all()));
}

TEST_CASE("coherence loops") {
  auto C2 = abelian_group_stack(cyclic(2));
  check_monoid(C2);
  CHECK(coherence_loops(C2).ok());
  auto D = kronecker_finite(4, 2);
  check_monoid(D);
  CHECK(coherence_loops(D).ok());
  CHECK_THROWS_AS(coherence_loops(kronecker_finite(2, 1)), StructuralError);
}

TEST_CASE("a twisted associator breaks the dodecagon") {
  for (int n = 2; n <= 4; ++n) {
    auto D = abelian_group_stack(cyclic(n));
    check_monoid(D);
    auto target = evaluate("(id * mu) ; mu", D.env());
    auto t = nontrivial_auto(target);
    REQUIRE(t);
    D.ass = vertical(*D.ass, *t);
    CHECK_FALSE(coherence_loops(D).dodecagon);
    // re-choosing finds a coherent associator again
    auto rep = check_coherence(D);
    CHECK(rep.ok());
    CHECK(rep.rechosen);
  }
  // here the associator has no other choice
  auto K = kronecker_finite(4, 2);
  check_monoid(K);
  CHECK_FALSE(nontrivial_auto(evaluate("(id * mu) ; mu", K.env())));
}
