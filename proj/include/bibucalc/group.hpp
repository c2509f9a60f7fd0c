#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bibucalc/calculus.hpp"
#include "bibucalc/diagram.hpp"

namespace bibu {

/// Structure bibundles of a stacky group over `base`:
/// mu: G x G -> G, e: 1 -> G, optionally i: G -> G, plus the 2-cells found by
/// check_monoid (and possibly re-chosen by check_coherence).
struct StackyGroupData {
  GroupoidPtr base;
  Bibundle mu, e;
  std::optional<Bibundle> i;
  std::optional<IsoWitness> ass;   // (mu * id) ; mu  =>  (id * mu) ; mu
  std::optional<IsoWitness> luni;  // (e * id) ; mu  =>  id
  std::optional<IsoWitness> runi;  // (id * e) ; mu  =>  id

  DiagramEnv env() const;
};

/// Normal subgroup A of a finite group B (one-object groupoid), A given by
/// membership flags over B's arrows.
struct CrossedModuleIncl {
  GroupoidPtr B;
  std::vector<bool> in_A;
};

ValidationReport validate_crossed_module(const CrossedModuleIncl& cm);

/// Base T_1 = A x B over T_0 = B with l(a, b) = a b, r(a, b) = b and
/// (a1, b1)(a2, b2) = (a1 a2, b2). The group law on T is
/// (a1, b1)(a2, b2) = (a1 b1 a2 b1^-1, b1 b2) and mu, e, i are its
/// bundlizations. Throws StructuralError when A is not normal.
StackyGroupData two_group_from_crossed_module(const CrossedModuleIncl& cm);

/// B = Z/N, A = <q>; l(k, t) = t + k.
StackyGroupData kronecker_finite(int N, int q);

/// A finite abelian group as a one-object groupoid, with mu, e and i the
/// bundlized multiplication, unit and inversion. Throws when the
/// multiplication is not a homomorphism.
StackyGroupData abelian_group_stack(const GroupoidPtr& group);

/// The homomorphisms behind the crossed-module structure bibundles.
struct CrossedModuleHoms {
  GroupoidHom mult, unit, inverse;
};
CrossedModuleHoms crossed_module_homs(const CrossedModuleIncl& cm, const GroupoidPtr& T);

/// Base Triv(2) = {0, 1} with mu the bundlized AND and e the bundlized 1:
/// a stacky monoid that is not a group.
StackyGroupData and_monoid();

struct MonoidReport {
  bool mu_principal = false, e_principal = false;
  bool ass = false, luni = false, runi = false;
  bool ok() const { return mu_principal && e_principal && ass && luni && runi; }
};

/// Looks for the three 2-cells and stores them in D.
MonoidReport check_monoid(StackyGroupData& D);

struct BimonoidReport {
  bool mu_counit = false;   // mu ; eps  =  eps * eps
  bool mu_comult = false;   // mu ; delta  =  (delta * delta) ; (id * tau * id) ; (mu * mu)
  bool e_comult = false;    // e ; delta  =  e * e
  bool e_counit = false;    // e ; eps  =  one
  bool ok() const { return mu_counit && mu_comult && e_comult && e_counit; }
};

BimonoidReport check_bimonoid(const StackyGroupData& D);

inline constexpr const char* kPreinverseExpr = "(cv * id * e) ; (id * mu * id) ; (id * ev)";

Bibundle preinverse(const StackyGroupData& D);

struct GroupReport {
  bool group = false;  // preinverse is a weak isomorphism
  PrincipalityReport s_right, s_left;
  // only filled when D.i is present
  std::optional<bool> left_antipode, right_antipode, i_is_preinverse;
};

GroupReport check_group(const StackyGroupData& D);

struct CoherenceReport {
  bool dodecagon = false;
  bool unit_pentagon = false;
  bool rechosen = false;  // stored 2-cells were replaced by a coherent choice
  bool ok() const { return dodecagon && unit_pentagon; }
};

/// Evaluates both loops with the stored 2-cells only.
CoherenceReport coherence_loops(const StackyGroupData& D);
/// Same, but if the stored 2-cells fail it tries other isomorphisms for ass
/// and runi (at most `cap` each) and stores the first coherent choice.
CoherenceReport check_coherence(StackyGroupData& D, std::size_t cap = 64);

}  // namespace bibu
