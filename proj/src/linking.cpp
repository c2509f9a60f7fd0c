#include "bibucalc/linking.hpp"

namespace bibu {

namespace {


}  // namespace

LinkingCategory linking_category(const Bibundle& M) {
  const auto& G = M.G();
  const auto& H = M.H();
  const int go = static_cast<int>(G.num_objects()), ga = static_cast<int>(G.num_arrows());
  const int nm = static_cast<int>(M.size());
  std::vector<std::string> objs, arrs;
  for (const auto& s : G.objects().labels()) objs.push_back("G:" + s);
  for (const auto& s : H.objects().labels()) objs.push_back("H:" + s);
  std::vector<int> l, r, unit;
  for (int g = 0; g < ga; ++g) {
    arrs.push_back("G:" + G.arrows().label(g));
    l.push_back(G.l(g));
    r.push_back(G.r(g));
  }
  for (int m = 0; m < nm; ++m) {
    arrs.push_back("M:" + M.label(m));
    l.push_back(M.lm(m));
    r.push_back(go + M.rm(m));
  }
  for (int h = 0; h < static_cast<int>(H.num_arrows()); ++h) {
    arrs.push_back("H:" + H.arrows().label(h));
    l.push_back(go + H.l(h));
    r.push_back(go + H.r(h));
  }
  for (int x = 0; x < go; ++x) unit.push_back(G.unit(x));
  for (int y = 0; y < static_cast<int>(H.num_objects()); ++y) unit.push_back(ga + nm + H.unit(y));
  const int hoff = ga + nm;
  auto comp = [&](int a, int b) -> int {
    if (a < ga && b < ga) return G.comp(a, b);
    if (a < ga) return ga + M.act_left(a, b - ga);
    if (a < hoff) return ga + M.act_right(a - ga, b - hoff);
    return hoff + H.comp(a - hoff, b - hoff);
  };
  return {FinCategory(FinSet(objs), FinSet(arrs), l, r, unit, comp), go, ga, nm};
}

Bibundle bibundle_from_linking(const LinkingCategory& L, const GroupoidPtr& G, const GroupoidPtr& H) {
  const auto& C = L.cat;
  const int ga = L.g_arrows, nm = L.m_arrows, go = L.g_objects;
  std::vector<std::string> labels;
  std::vector<int> lm, rm;
  for (int m = 0; m < nm; ++m) {
    labels.push_back(C.arrows().label(ga + m).substr(2));
    lm.push_back(C.l(ga + m));
    rm.push_back(C.r(ga + m) - go);
  }
  return Bibundle(
      G, H, FinSet(labels), lm, rm, [&](int g, int m) { return C.comp(g, ga + m) - ga; },
      [&](int m, int h) { return C.comp(ga + m, ga + nm + h) - ga; });
}

PrincipalityReport principality_via_linking(const LinkingCategory& L, Side side) {
  const auto& C = L.cat;
  PrincipalityReport rep;
  const int na = static_cast<int>(C.num_arrows()), no = static_cast<int>(C.num_objects());
  auto A = [&](int a) { return C.arrows().label(a); };
  // arrows from an H-object to a G-object, i.e. l in G_0 and r in H_0
  auto crossing = [&](int a) { return !L.is_h_object(C.l(a)) && L.is_h_object(C.r(a)); };
  const bool right = side == Side::Right;
  // P1: every object on the far side is reached by a crossing arrow.
  for (int x = 0; x < no && rep.p1; ++x) {
    if (L.is_h_object(x) == right) continue;
    bool hit = false;
    for (int a = 0; a < na && !hit; ++a) hit = crossing(a) && (right ? C.l(a) : C.r(a)) == x;
    if (!hit) {
      rep.p1 = false;
      rep.empty_fiber = true;
      rep.w1 = {C.objects().label(x)};
    }
  }
  // P2: factorizations b = a o h (right) or b = g o a (left) are unique.
  // P3: such a factorization exists for every b sharing the relevant moment.
  for (int a = 0; a < na; ++a) {
    if (!crossing(a)) continue;
    for (int b = 0; b < na; ++b) {
      if (!crossing(b)) continue;
      if (right ? C.l(a) != C.l(b) : C.r(a) != C.r(b)) continue;
      std::vector<int> factors;
      if (right) {
        for (int h : C.with_left(C.r(a)))
          if (L.is_h_object(C.r(h)) && C.comp(a, h) == b) factors.push_back(h);
      } else {
        for (int g : C.with_right(C.l(a)))
          if (!L.is_h_object(C.l(g)) && C.comp(g, a) == b) factors.push_back(g);
      }
      if (factors.size() > 1 && rep.p2) {
        rep.p2 = false;
        rep.w2 = {A(a), A(b), A(factors[0]), A(factors[1])};
      }
      if (factors.empty() && rep.p3) {
        rep.p3 = false;
        rep.w3 = {A(a), A(b)};
      }
    }
  }
  return rep;
}

PrincipalityReport principality_via_linking(const Bibundle& M, Side side) {
  return principality_via_linking(linking_category(M), side);
}

LinkingGroupoidResult linking_groupoid(const Bibundle& M) {
  LinkingGroupoidResult res;
  auto rp = compute_pairing(M);
  auto lp = compute_left_pairing(M);
  res.right = check_principal(M, Side::Right);
  res.left = check_principal(M, Side::Left);
  if (!rp.pairing || !lp.pairing || !res.right.all() || !res.left.all()) return res;
  const auto& P = *rp.pairing;
  const auto& Q = *lp.pairing;
  const auto& G = M.G();
  const auto& H = M.H();
  const int go = static_cast<int>(G.num_objects()), ga = static_cast<int>(G.num_arrows());
  const int nm = static_cast<int>(M.size());
  const int mo = ga, bo = ga + nm, ho = ga + 2 * nm;  // offsets of M, Mop, H
  std::vector<std::string> objs, arrs;
  for (const auto& s : G.objects().labels()) objs.push_back("G:" + s);
  for (const auto& s : H.objects().labels()) objs.push_back("H:" + s);
  std::vector<int> l, r, unit, inv;
  for (int g = 0; g < ga; ++g) {
    arrs.push_back("G:" + G.arrows().label(g));
    l.push_back(G.l(g));
    r.push_back(G.r(g));
    inv.push_back(G.inv(g));
  }
  for (int m = 0; m < nm; ++m) {
    arrs.push_back("M:" + M.label(m));
    l.push_back(M.lm(m));
    r.push_back(go + M.rm(m));
    inv.push_back(bo + m);
  }
  for (int m = 0; m < nm; ++m) {
    arrs.push_back("Mop:" + M.label(m));
    l.push_back(go + M.rm(m));
    r.push_back(M.lm(m));
    inv.push_back(mo + m);
  }
  for (int h = 0; h < static_cast<int>(H.num_arrows()); ++h) {
    arrs.push_back("H:" + H.arrows().label(h));
    l.push_back(go + H.l(h));
    r.push_back(go + H.r(h));
    inv.push_back(ho + H.inv(h));
  }
  for (int x = 0; x < go; ++x) unit.push_back(G.unit(x));
  for (int y = 0; y < static_cast<int>(H.num_objects()); ++y) unit.push_back(ho + H.unit(y));
  enum Kind { KG, KM, KB, KH };
  auto kind = [&](int a) { return a < mo ? KG : a < bo ? KM : a < ho ? KB : KH; };
  auto comp = [&](int a, int b) -> int {
    switch (kind(a) * 4 + kind(b)) {
      case KG * 4 + KG: return G.comp(a, b);
      case KG * 4 + KM: return mo + M.act_left(a, b - mo);
      case KM * 4 + KH: return mo + M.act_right(a - mo, b - ho);
      case KM * 4 + KB: return Q.at(a - mo, b - bo);
      case KB * 4 + KM: return ho + P.at(a - bo, b - mo);
      case KB * 4 + KG: return bo + M.act_left(G.inv(b), a - bo);
      case KH * 4 + KB: return bo + M.act_right(b - bo, H.inv(a - ho));
      case KH * 4 + KH: return ho + H.comp(a - ho, b - ho);
      default: return -1;
    }
  };
  res.groupoid = std::make_shared<const FinGroupoid>(
      FinCategory(FinSet(objs), FinSet(arrs), l, r, unit, comp), inv);
  return res;
}

}  // namespace bibu
