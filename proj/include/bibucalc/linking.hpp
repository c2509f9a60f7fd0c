#pragma once

#include <optional>

#include "bibucalc/bibundle.hpp"

namespace bibu {

/// Category on G_0 + H_0 with arrows G_1 + M + H_1, labels tagged "G:", "M:",
/// "H:". Composites g.m and m.h come from the actions; an M-arrow always has
/// l in G_0 and r in H_0.
struct LinkingCategory {
  FinCategory cat;
  int g_objects = 0, g_arrows = 0, m_arrows = 0;

  bool is_h_object(int x) const { return x >= g_objects; }
  bool is_m_arrow(int a) const { return a >= g_arrows && a < g_arrows + m_arrows; }
};

/// Built without checking M, so a bad action table shows up as a category
/// axiom failure of the result.
LinkingCategory linking_category(const Bibundle& M);

/// Reads the actions back off a linking category over the given groupoids.
Bibundle bibundle_from_linking(const LinkingCategory& L, const GroupoidPtr& G,
                               const GroupoidPtr& H);

/// Principality computed from arrow existence and factorizations in the
/// linking category alone.
PrincipalityReport principality_via_linking(const LinkingCategory& L, Side side);
PrincipalityReport principality_via_linking(const Bibundle& M, Side side);

struct LinkingGroupoidResult {
  GroupoidPtr groupoid;  // null when M is not biprincipal
  PrincipalityReport right, left;
};

/// Groupoid on G_0 + H_0 with arrows G_1 + M + M^op + H_1 ("Mop:" tag),
/// m o n^op = G<m, n> and m^op o n = <m, n>H.
LinkingGroupoidResult linking_groupoid(const Bibundle& M);

}  // namespace bibu
