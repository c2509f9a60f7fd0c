#pragma once

#include <random>
#include <string>
#include <vector>

#include "bibucalc/calculus.hpp"

namespace bibu {

using Rng = std::mt19937_64;

/// Symmetric group on three letters, arrows "e", "s", "t", "st", "ts", "sts".
GroupoidPtr symmetric3();
/// Z/n acting on m points: the first d points rotate, where d is the largest
/// divisor of n with d <= m; the rest are fixed.
GroupoidPtr cyclic_action(int n, int m);

struct NamedGroupoid {
  std::string name;
  GroupoidPtr g;
};

/// Triv(1..3), Pair(2..3), Cyc(2..5), Z/2 on 3 points, Z/3 on 4 points.
std::vector<NamedGroupoid> standard_groupoids();

/// Disjoint union of one to three components Pair(n) x K with K among
/// Z/1..Z/4, Z/2 x Z/2 and S3, at most max_arrows arrows in total.
GroupoidPtr random_groupoid(Rng& rng, int max_arrows);

/// Some functor G -> H, found by randomized search. H must be non-empty
/// when G is.
GroupoidHom random_hom(Rng& rng, const GroupoidPtr& G, const GroupoidPtr& H);
/// A functor naturally isomorphic to phi: each object x is moved along a
/// random arrow a_x with r(a_x) = phi0(x).
GroupoidHom conjugate_hom(Rng& rng, const GroupoidHom& phi);

/// Same bibundle with its carrier points randomly reordered.
Bibundle shuffle_carrier(Rng& rng, const Bibundle& M);

/// Disjoint union of transitive orbits of G x H^op, each the quotient of
/// {k : r(k) = (x, y)} by a random subgroup of the isotropy at (x, y).
/// Carrier labels "o<i>[k]". Points are capped at max_points.
Bibundle random_bibundle(Rng& rng, const GroupoidPtr& G, const GroupoidPtr& H, int max_points);

/// bundlize(random_hom) with a shuffled carrier.
Bibundle random_right_principal(Rng& rng, const GroupoidPtr& G, const GroupoidPtr& H);

}  // namespace bibu
