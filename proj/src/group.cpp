#include "bibucalc/group.hpp"

namespace bibu {

namespace {

std::size_t U(int x) { return static_cast<std::size_t>(x); }

}  // namespace

DiagramEnv StackyGroupData::env() const {
  DiagramEnv env(base);
  env.bind("mu", mu, 2, 1);
  env.bind("e", e, 0, 1);
  if (i) env.bind("inv", *i, 1, 1);
  return env;
}

ValidationReport validate_crossed_module(const CrossedModuleIncl& cm) {
  ValidationReport rep;
  const auto& B = *cm.B;
  if (B.num_objects() != 1) throw StructuralError("crossed module: B must be a one-object groupoid");
  if (cm.in_A.size() != B.num_arrows()) throw StructuralError("crossed module: membership table has wrong size");
  const int n = static_cast<int>(B.num_arrows());
  auto in = [&](int x) { return static_cast<bool>(cm.in_A[U(x)]); };
  auto L = [&](int x) { return B.arrows().label(x); };
  if (!in(B.unit(0))) rep.note("subgroup-unit", {L(B.unit(0))});
  for (int a = 0; a < n; ++a) {
    if (!in(a)) continue;
    if (!in(B.inv(a))) rep.note("subgroup-inverse", {L(a)});
    for (int a2 = 0; a2 < n; ++a2)
      if (in(a2) && !in(B.comp(a, a2))) rep.note("subgroup-product", {L(a), L(a2)});
    for (int b = 0; b < n; ++b)
      if (!in(B.comp(B.comp(b, a), B.inv(b)))) rep.note("normal", {L(a), L(b)});
  }
  return rep;
}

CrossedModuleHoms crossed_module_homs(const CrossedModuleIncl& cm, const GroupoidPtr& T) {
  const auto& B = *cm.B;
  const int nb = static_cast<int>(B.num_arrows());
  std::vector<int> ak, aidx(U(nb), -1);
  for (int x = 0; x < nb; ++x)
    if (cm.in_A[U(x)]) {
      aidx[U(x)] = static_cast<int>(ak.size());
      ak.push_back(x);
    }
  const int na = static_cast<int>(ak.size());
  const int nt = na * nb;
  auto arrow = [&](int a, int b) { return aidx[U(a)] * nb + b; };
  CrossedModuleHoms h;
  auto TT = product(T, T);
  h.mult = {TT, T, {}, {}};
  for (int b1 = 0; b1 < nb; ++b1)
    for (int b2 = 0; b2 < nb; ++b2) h.mult.f0.push_back(B.comp(b1, b2));
  for (int t1 = 0; t1 < nt; ++t1)
    for (int t2 = 0; t2 < nt; ++t2) {
      int a1 = ak[U(t1 / nb)], b1 = t1 % nb, a2 = ak[U(t2 / nb)], b2 = t2 % nb;
      int conj = B.comp(B.comp(b1, a2), B.inv(b1));
      h.mult.f1.push_back(arrow(B.comp(a1, conj), B.comp(b1, b2)));
    }
  const int e = B.unit(0);
  h.unit = {unit_groupoid(), T, {e}, {arrow(e, e)}};
  h.inverse = {T, T, {}, {}};
  for (int b = 0; b < nb; ++b) h.inverse.f0.push_back(B.inv(b));
  for (int t = 0; t < nt; ++t) {
    int a = ak[U(t / nb)], b = t % nb;
    h.inverse.f1.push_back(arrow(B.comp(B.comp(B.inv(b), B.inv(a)), b), B.inv(b)));
  }
  return h;
}

StackyGroupData two_group_from_crossed_module(const CrossedModuleIncl& cm) {
  auto rep = validate_crossed_module(cm);
  if (!rep.ok()) {
    std::string w;
    for (const auto& s : rep.violations.front().witness) w += " " + s;
    throw StructuralError("not a crossed module: " + rep.violations.front().axiom + " fails at" + w);
  }
  const auto& B = *cm.B;
  const int nb = static_cast<int>(B.num_arrows());
  std::vector<int> ak;
  for (int x = 0; x < nb; ++x)
    if (cm.in_A[U(x)]) ak.push_back(x);
  std::vector<std::string> alabels;
  std::vector<std::vector<int>> mult(ak.size(), std::vector<int>(ak.size()));
  for (std::size_t i = 0; i < ak.size(); ++i) {
    alabels.push_back(B.arrows().label(ak[i]));
    for (std::size_t j = 0; j < ak.size(); ++j) {
      int p = B.comp(ak[i], ak[j]);
      mult[i][j] = static_cast<int>(std::find(ak.begin(), ak.end(), p) - ak.begin());
    }
  }
  auto A = one_object(alabels, mult);
  auto T = action_groupoid(A, B.arrows(), [&](int k, int z) { return B.comp(ak[U(k)], z); });
  auto h = crossed_module_homs(cm, T);
  StackyGroupData D{T, bundlize(h.mult), bundlize(h.unit), bundlize(h.inverse), {}, {}, {}};
  return D;
}

StackyGroupData kronecker_finite(int N, int q) {
  if (N < 1 || q < 1 || q > N || N % q != 0)
    throw StructuralError("kronecker_finite needs 1 <= q <= N with q | N");
  CrossedModuleIncl cm{cyclic(N), std::vector<bool>(U(N), false)};
  for (int k = 0; k < N; k += q) cm.in_A[U(k)] = true;
  return two_group_from_crossed_module(cm);
}

StackyGroupData abelian_group_stack(const GroupoidPtr& group) {
  const auto& A = *group;
  if (A.num_objects() != 1) throw StructuralError("abelian_group_stack: need a one-object groupoid");
  const int n = static_cast<int>(A.num_arrows());
  GroupoidHom mult{product(group, group), group, {0}, {}};
  GroupoidHom inv{group, group, {0}, {}};
  for (int a = 0; a < n; ++a) {
    inv.f1.push_back(A.inv(a));
    for (int b = 0; b < n; ++b) mult.f1.push_back(A.comp(a, b));
  }
  auto rep = check_hom(mult);
  if (!rep.ok()) throw StructuralError("abelian_group_stack: multiplication is not a homomorphism (group not abelian)");
  GroupoidHom unit{unit_groupoid(), group, {0}, {A.unit(0)}};
  return StackyGroupData{group, bundlize(mult), bundlize(unit), bundlize(inv), {}, {}, {}};
}

StackyGroupData and_monoid() {
  auto T = trivial(2);
  auto TT = product(T, T);
  GroupoidHom mult{TT, T, {0, 0, 0, 1}, {0, 0, 0, 1}};
  GroupoidHom unit{unit_groupoid(), T, {1}, {1}};
  return StackyGroupData{T, bundlize(mult), bundlize(unit), std::nullopt, {}, {}, {}};
}

MonoidReport check_monoid(StackyGroupData& D) {
  MonoidReport rep;
  rep.mu_principal = check_principal(D.mu, Side::Right).all();
  rep.e_principal = check_principal(D.e, Side::Right).all();
  auto env = D.env();
  Bibundle id = identity_bibundle(D.base);
  D.ass = find_iso(evaluate("(mu * id) ; mu", env), evaluate("(id * mu) ; mu", env));
  D.luni = find_iso(evaluate("(e * id) ; mu", env), id);
  D.runi = find_iso(evaluate("(id * e) ; mu", env), id);
  rep.ass = D.ass.has_value();
  rep.luni = D.luni.has_value();
  rep.runi = D.runi.has_value();
  return rep;
}

BimonoidReport check_bimonoid(const StackyGroupData& D) {
  auto env = D.env();
  BimonoidReport rep;
  rep.mu_counit = check_identity("mu ; eps", "eps * eps", env).has_value();
  rep.mu_comult = check_identity("mu ; delta", "(delta * delta) ; (id * tau * id) ; (mu * mu)", env)
                      .has_value();
  rep.e_comult = check_identity("e ; delta", "e * e", env).has_value();
  rep.e_counit = check_identity("e ; eps", "one", env).has_value();
  return rep;
}

Bibundle preinverse(const StackyGroupData& D) { return evaluate(kPreinverseExpr, D.env()); }

GroupReport check_group(const StackyGroupData& D) {
  GroupReport rep;
  Bibundle s = preinverse(D);
  auto w = is_weak_isomorphism(s);
  rep.group = w.weak_iso;
  rep.s_right = w.right;
  rep.s_left = w.left;
  if (D.i) {
    auto env = D.env();
    rep.left_antipode = check_identity("delta ; (inv * id) ; mu", "eps ; e", env).has_value();
    rep.right_antipode = check_identity("delta ; (id * inv) ; mu", "eps ; e", env).has_value();
    rep.i_is_preinverse = isomorphic(*D.i, s);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Coherence loops

namespace {

// Every bibundle and composite that occurs around the two loops. Face maps:
// d2 = mu, d3_1 = mu x 1, d3_2 = 1 x mu, d4_1 = mu x 1 x 1, d4_2 = 1 x mu x 1,
// d4_3 = 1 x 1 x mu, s = 1 x e x 1.
struct Faces {
  Bibundle id, mu, d3_1, d3_2, d4_1, d4_2, d4_3, idid, s, ide, eid;
  ComposedBibundle D1, D2;  // d3_j o d2
  ComposedBibundle C11, C21, C22, C32, C12, C31;  // d4_i o d3_j
  ComposedBibundle X11, X21, X22, X32, X12, X31;  // (d4_i o d3_j) o d2
  ComposedBibundle Y11, Y12, Y21, Y22, Y31, Y32;  // d4_i o (d3_j o d2)
  ComposedBibundle IdId, MuId, IIMu, IdEMu, EIdMu;
  ComposedBibundle S1, S2, W1, W2, Z1, Z2;

  explicit Faces(const StackyGroupData& D)
      : id(identity_bibundle(D.base)), mu(D.mu) {
    d3_1 = tensor(mu, id);
    d3_2 = tensor(id, mu);
    d4_1 = tensor(d3_1, id);
    d4_2 = tensor(d3_2, id);
    d4_3 = tensor(id, d3_2);
    idid = tensor(id, id);
    ide = tensor(id, D.e);
    eid = tensor(D.e, id);
    s = tensor(ide, id);
    D1 = compose(d3_1, mu);
    D2 = compose(d3_2, mu);
    C11 = compose(d4_1, d3_1);
    C21 = compose(d4_2, d3_1);
    C22 = compose(d4_2, d3_2);
    C32 = compose(d4_3, d3_2);
    C12 = compose(d4_1, d3_2);
    C31 = compose(d4_3, d3_1);
    X11 = compose(C11.bundle, mu);
    X21 = compose(C21.bundle, mu);
    X22 = compose(C22.bundle, mu);
    X32 = compose(C32.bundle, mu);
    X12 = compose(C12.bundle, mu);
    X31 = compose(C31.bundle, mu);
    Y11 = compose(d4_1, D1.bundle);
    Y12 = compose(d4_1, D2.bundle);
    Y21 = compose(d4_2, D1.bundle);
    Y22 = compose(d4_2, D2.bundle);
    Y31 = compose(d4_3, D1.bundle);
    Y32 = compose(d4_3, D2.bundle);
    IdId = compose(id, id);
    MuId = compose(mu, id);
    IIMu = compose(idid, mu);
    IdEMu = compose(ide, mu);
    EIdMu = compose(eid, mu);
    S1 = compose(s, d3_1);
    S2 = compose(s, d3_2);
    W1 = compose(S1.bundle, mu);
    W2 = compose(S2.bundle, mu);
    Z1 = compose(s, D1.bundle);
    Z2 = compose(s, D2.bundle);
  }
};

IsoWitness chain(std::initializer_list<IsoWitness> steps) {
  auto it = steps.begin();
  IsoWitness acc = *it;
  for (++it; it != steps.end(); ++it) acc = vertical(acc, *it);
  return acc;
}

bool dodecagon_holds(const Faces& F, const IsoWitness& ass) {
  const std::size_t ni = F.id.size(), nmu = F.mu.size();
  const IsoWitness idIdId = identity_witness(F.IdId.bundle);
  const IsoWitness id_d2 = identity_witness(F.mu);
  // interchange isos C_ij -> AC x BD for the relevant splittings
  auto I11 = interchange_witness(F.C11, F.D1, F.IdId, ni, ni);
  auto I21 = interchange_witness(F.C21, F.D2, F.IdId, ni, ni);
  auto I22 = interchange_witness(F.C22, F.IdId, F.D1, F.d3_1.size(), nmu);
  auto I32 = interchange_witness(F.C32, F.IdId, F.D2, F.d3_2.size(), nmu);
  auto I12 = interchange_witness(F.C12, F.MuId, F.IIMu, F.idid.size(), nmu);
  auto I31 = interchange_witness(F.C31, F.IIMu, F.MuId, nmu, ni);
  auto lu_II = left_unit_witness(F.IIMu, F.mu);
  auto ru_mu = right_unit_witness(F.MuId, F.mu);

  auto phi_a = chain({I11, tensor_map(ass, idIdId), invert(I21)});
  auto phi_b = chain({I22, tensor_map(idIdId, ass), invert(I32)});
  auto to_mumu_12 = vertical(I12, tensor_map(ru_mu, lu_II));
  auto to_mumu_31 = vertical(I31, tensor_map(lu_II, ru_mu));
  auto psi = vertical(to_mumu_12, invert(to_mumu_31));

  auto left = chain({horizontal(F.X11, F.X21, phi_a, id_d2),
                     associator_witness(F.C21, F.X21, F.D1, F.Y21),
                     horizontal(F.Y21, F.Y22, identity_witness(F.d4_2), ass),
                     invert(associator_witness(F.C22, F.X22, F.D2, F.Y22)),
                     horizontal(F.X22, F.X32, phi_b, id_d2),
                     associator_witness(F.C32, F.X32, F.D2, F.Y32)});
  auto right = chain({associator_witness(F.C11, F.X11, F.D1, F.Y11),
                      horizontal(F.Y11, F.Y12, identity_witness(F.d4_1), ass),
                      invert(associator_witness(F.C12, F.X12, F.D2, F.Y12)),
                      horizontal(F.X12, F.X31, psi, id_d2),
                      associator_witness(F.C31, F.X31, F.D1, F.Y31),
                      horizontal(F.Y31, F.Y32, identity_witness(F.d4_3), ass)});
  return left.forward == right.forward;
}

bool unit_pentagon_holds(const Faces& F, const IsoWitness& ass, const IsoWitness& luni,
                         const IsoWitness& runi) {
  const std::size_t ni = F.id.size();
  auto lu_II = left_unit_witness(F.IIMu, F.mu);
  auto lu_id = left_unit_witness(F.IdId, F.id);
  const IsoWitness id_mu = identity_witness(F.mu);
  // s o d3_1 = (1 x e x 1) o (mu x 1)  ->  ((1 x e) o mu) x (1 o 1)  ->  1 x 1
  auto chi1 = vertical(interchange_witness(F.S1, F.IdEMu, F.IdId, ni, ni), tensor_map(runi, lu_id));
  // s o d3_2 = 1 x ((e x 1) o mu)  ->  1 x 1
  auto chi2 = vertical(interchange_witness(F.S2, F.IdId, F.EIdMu, F.eid.size(), F.mu.size()),
                       tensor_map(lu_id, luni));
  auto route_a = chain({invert(associator_witness(F.S1, F.W1, F.D1, F.Z1)),
                        horizontal(F.W1, F.IIMu, chi1, id_mu), lu_II});
  auto route_b = chain({horizontal(F.Z1, F.Z2, identity_witness(F.s), ass),
                        invert(associator_witness(F.S2, F.W2, F.D2, F.Z2)),
                        horizontal(F.W2, F.IIMu, chi2, id_mu), lu_II});
  return route_a.forward == route_b.forward;
}

}  // namespace

CoherenceReport coherence_loops(const StackyGroupData& D) {
  if (!D.ass || !D.luni || !D.runi) throw StructuralError("coherence: run check_monoid first");
  Faces F(D);
  CoherenceReport rep;
  rep.dodecagon = dodecagon_holds(F, *D.ass);
  rep.unit_pentagon = unit_pentagon_holds(F, *D.ass, *D.luni, *D.runi);
  return rep;
}

CoherenceReport check_coherence(StackyGroupData& D, std::size_t cap) {
  if (!D.ass || !D.luni || !D.runi) throw StructuralError("coherence: run check_monoid first");
  Faces F(D);
  CoherenceReport rep;
  rep.dodecagon = dodecagon_holds(F, *D.ass);
  rep.unit_pentagon = rep.dodecagon && unit_pentagon_holds(F, *D.ass, *D.luni, *D.runi);
  if (rep.ok()) return rep;
  auto asses = find_all_isos(F.D1.bundle, F.D2.bundle, cap);
  auto runis = find_all_isos(F.IdEMu.bundle, F.id, cap);
  for (const auto& a : asses) {
    if (!dodecagon_holds(F, a)) continue;
    rep.dodecagon = true;
    for (const auto& ru : runis)
      if (unit_pentagon_holds(F, a, *D.luni, ru)) {
        D.ass = a;
        D.runi = ru;
        rep.unit_pentagon = true;
        rep.rechosen = true;
        return rep;
      }
  }
  return rep;
}

}  // namespace bibu
