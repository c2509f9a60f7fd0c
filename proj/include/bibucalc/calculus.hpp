#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bibucalc/bibundle.hpp"

namespace bibu {

/// Biequivariant bijection A -> B given by index tables.
struct IsoWitness {
  std::vector<int> forward;
  std::vector<int> backward;
  bool operator==(const IsoWitness&) const = default;
};

/// M o N with carrier the orbits of M x_{H_0} N under (m, n).h = (m.h, h^-1.n).
/// Each orbit is represented by its lexicographically least pair and carries
/// the label "[m;n]".
struct ComposedBibundle {
  Bibundle bundle;
  std::vector<int> rep_m, rep_n;  // per carrier point of `bundle`
  std::vector<std::size_t> pair_offset;
  std::vector<int> n_pos;        // position of n in its l-fiber of N
  std::vector<int> pair_class;   // dense pair id -> carrier point

  /// Orbit of (m, n); requires r_M(m) == l_N(n).
  int proj(int m, int n) const {
    return pair_class[pair_offset[static_cast<std::size_t>(m)] +
                      static_cast<std::size_t>(n_pos[static_cast<std::size_t>(n)])];
  }
};

ComposedBibundle compose(const Bibundle& M, const Bibundle& N);

// ---------------------------------------------------------------------------
// Generators

Bibundle identity_bibundle(const GroupoidPtr& G);
/// G -> G x G, carrier pairs (g1, g2) with l(g1) = l(g2).
Bibundle diagonal(const GroupoidPtr& G);
/// G -> 1, carrier G_0 with g.x = l(g).
Bibundle terminal_morphism(const GroupoidPtr& G);
/// (G x H) -> (H x G), the bundlization of the swap.
Bibundle flip(const GroupoidPtr& G, const GroupoidPtr& H);
/// (G x G) -> 1, carrier G_1, l(g) = (l g, r g), (g1, g2).g = g1 g g2^-1.
Bibundle ev(const GroupoidPtr& G);
/// 1 -> (G x G), carrier G_1, r(g) = (l g, r g), g.(g1, g2) = g1^-1 g g2.
Bibundle cv(const GroupoidPtr& G);

/// Carrier {(x, h) : phi0(x) = l(h)}, l(x,h) = x, r(x,h) = r(h),
/// k.(x,h) = (l k, phi1(k) h), (x,h).h' = (x, h h').
Bibundle bundlize(const GroupoidHom& phi);

/// l and r swapped, h.m = m.h^-1, m.g = g^-1.m.
Bibundle opposite(const Bibundle& M);

/// Componentwise; carrier point m * |N| + n labelled "m,n".
Bibundle tensor(const Bibundle& M, const Bibundle& N);

/// Same bibundle with carrier point i renamed to position perm[i].
Bibundle permute_carrier(const Bibundle& M, const std::vector<int>& perm,
                         const std::vector<std::string>& labels);

// ---------------------------------------------------------------------------
// 2-cells

/// Checks that W is a biequivariant bijection A -> B.
bool check_iso(const IsoWitness& W, const Bibundle& A, const Bibundle& B);

IsoWitness identity_witness(const Bibundle& A);
/// First W, then V.
IsoWitness vertical(const IsoWitness& W, const IsoWitness& V);
IsoWitness invert(const IsoWitness& W);

/// [a, b] -> [phi a, psi b] from src = A o B to dst = A' o B'.
IsoWitness horizontal(const ComposedBibundle& src, const ComposedBibundle& dst,
                      const IsoWitness& phi, const IsoWitness& psi);
/// phi x psi on tensor carriers.
IsoWitness tensor_map(const IsoWitness& phi, const IsoWitness& psi);

/// [g, m] -> g.m from Id_G o M.
IsoWitness left_unit_witness(const ComposedBibundle& IdM, const Bibundle& M);
/// [m, h] -> m.h from M o Id_H.
IsoWitness right_unit_witness(const ComposedBibundle& MId, const Bibundle& M);
/// [[m, n], l] -> [m, [n, l]].
IsoWitness associator_witness(const ComposedBibundle& MN, const ComposedBibundle& MN_L,
                              const ComposedBibundle& NL, const ComposedBibundle& M_NL);
/// [(a, b), (c, d)] -> ([a, c], [b, d]) from (A x B) o (C x D) to (A o C) x (B o D).
IsoWitness interchange_witness(const ComposedBibundle& AB_CD, const ComposedBibundle& AC,
                               const ComposedBibundle& BD, std::size_t b_size, std::size_t d_size);

/// Lexicographically least biequivariant bijection, or none. Bibundles over
/// different groupoids are never isomorphic.
std::optional<IsoWitness> find_iso(const Bibundle& A, const Bibundle& B);
/// Every biequivariant bijection in lexicographic order, at most `cap` of them.
std::vector<IsoWitness> find_all_isos(const Bibundle& A, const Bibundle& B, std::size_t cap);
bool isomorphic(const Bibundle& A, const Bibundle& B);

struct WeakIsoResult {
  bool weak_iso = false;
  PrincipalityReport right, left;
  std::optional<Bibundle> inverse;
  std::optional<IsoWitness> unit_g;  // M o M^op -> Id_G
  std::optional<IsoWitness> unit_h;  // M^op o M -> Id_H
};

WeakIsoResult is_weak_isomorphism(const Bibundle& M);

}  // namespace bibu
