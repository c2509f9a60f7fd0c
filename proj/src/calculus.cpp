#include "bibucalc/calculus.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bibu {

namespace {

std::size_t U(int x) { return static_cast<std::size_t>(x); }

}  // namespace

ComposedBibundle compose(const Bibundle& M, const Bibundle& N) {
  if (!same_groupoid(M.right(), N.left()))
    throw StructuralError("compose: right groupoid of the first factor differs from the left groupoid of the second");
  const auto& H = M.H();
  const int nm = static_cast<int>(M.size()), nn = static_cast<int>(N.size());
  ComposedBibundle C;
  C.pair_offset.assign(U(nm) + 1, 0);
  for (int m = 0; m < nm; ++m) C.pair_offset[U(m) + 1] = C.pair_offset[U(m)] + N.fiber_l(M.rm(m)).size();
  C.n_pos.resize(U(nn));
  for (int n = 0; n < nn; ++n) C.n_pos[U(n)] = N.pos_in_fiber_l(n);
  C.pair_class.assign(C.pair_offset[U(nm)], -1);
  std::vector<std::string> labels;
  std::vector<int> lm, rm;
  for (int m = 0; m < nm; ++m) {
    for (int n : N.fiber_l(M.rm(m))) {
      if (C.proj(m, n) >= 0) continue;
      const int cls = static_cast<int>(C.rep_m.size());
      C.rep_m.push_back(m);
      C.rep_n.push_back(n);
      labels.push_back("[" + M.label(m) + ";" + N.label(n) + "]");
      lm.push_back(M.lm(m));
      rm.push_back(N.rm(n));
      for (int h : H.with_left(M.rm(m))) {
        int m2 = M.act_right(m, h);
        int n2 = N.act_left(H.inv(h), n);
        C.pair_class[C.pair_offset[U(m2)] + U(C.n_pos[U(n2)])] = cls;
      }
    }
  }
  C.bundle = Bibundle(
      M.left(), N.right(), FinSet(std::move(labels)), std::move(lm), std::move(rm),
      [&](int g, int c) { return C.proj(M.act_left(g, C.rep_m[U(c)]), C.rep_n[U(c)]); },
      [&](int c, int k) { return C.proj(C.rep_m[U(c)], N.act_right(C.rep_n[U(c)], k)); });
  return C;
}

Bibundle identity_bibundle(const GroupoidPtr& Gp) {
  const auto& G = *Gp;
  return Bibundle(Gp, Gp, G.arrows(), G.l_table(), G.r_table(),
                  [&](int g, int m) { return G.comp(g, m); },
                  [&](int m, int h) { return G.comp(m, h); });
}

Bibundle diagonal(const GroupoidPtr& Gp) {
  const auto& G = *Gp;
  auto GG = product(Gp, Gp);
  const int na = static_cast<int>(G.num_arrows()), no = static_cast<int>(G.num_objects());
  std::vector<std::size_t> off(U(na) + 1, 0);
  for (int g = 0; g < na; ++g) off[U(g) + 1] = off[U(g)] + G.with_left(G.l(g)).size();
  std::vector<std::string> labels;
  std::vector<int> lm, rm, first, second;
  for (int g1 = 0; g1 < na; ++g1)
    for (int g2 : G.with_left(G.l(g1))) {
      labels.push_back("(" + G.arrows().label(g1) + "," + G.arrows().label(g2) + ")");
      lm.push_back(G.l(g1));
      rm.push_back(G.r(g1) * no + G.r(g2));
      first.push_back(g1);
      second.push_back(g2);
    }
  auto idx = [&](int g1, int g2) { return static_cast<int>(off[U(g1)] + U(G.pos_in_left(g2))); };
  return Bibundle(
      Gp, GG, FinSet(std::move(labels)), std::move(lm), std::move(rm),
      [&](int g, int m) { return idx(G.comp(g, first[U(m)]), G.comp(g, second[U(m)])); },
      [&](int m, int a) {
        return idx(G.comp(first[U(m)], a / na), G.comp(second[U(m)], a % na));
      });
}

Bibundle terminal_morphism(const GroupoidPtr& Gp) {
  const auto& G = *Gp;
  return Bibundle(Gp, unit_groupoid(), G.objects(), [&] {
    std::vector<int> v(G.num_objects());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    return v;
  }(), std::vector<int>(G.num_objects(), 0), [&](int g, int) { return G.l(g); },
                  [](int m, int) { return m; });
}

Bibundle flip(const GroupoidPtr& G, const GroupoidPtr& H) { return bundlize(flip_hom(G, H)); }

Bibundle ev(const GroupoidPtr& Gp) {
  const auto& G = *Gp;
  auto GG = product(Gp, Gp);
  const int na = static_cast<int>(G.num_arrows()), no = static_cast<int>(G.num_objects());
  std::vector<int> lm;
  for (int g = 0; g < na; ++g) lm.push_back(G.l(g) * no + G.r(g));
  return Bibundle(
      GG, unit_groupoid(), G.arrows(), std::move(lm), std::vector<int>(U(na), 0),
      [&](int a, int g) { return G.comp(G.comp(a / na, g), G.inv(a % na)); },
      [](int m, int) { return m; });
}

Bibundle cv(const GroupoidPtr& Gp) {
  const auto& G = *Gp;
  auto GG = product(Gp, Gp);
  const int na = static_cast<int>(G.num_arrows()), no = static_cast<int>(G.num_objects());
  std::vector<int> rm;
  for (int g = 0; g < na; ++g) rm.push_back(G.l(g) * no + G.r(g));
  return Bibundle(
      unit_groupoid(), GG, G.arrows(), std::vector<int>(U(na), 0), std::move(rm),
      [](int, int m) { return m; },
      [&](int g, int a) { return G.comp(G.comp(G.inv(a / na), g), a % na); });
}

Bibundle bundlize(const GroupoidHom& phi) {
  const auto& K = *phi.source;
  const auto& H = *phi.target;
  if (phi.f0.size() != K.num_objects() || phi.f1.size() != K.num_arrows())
    throw StructuralError("bundlize: homomorphism tables are not total");
  const int no = static_cast<int>(K.num_objects());
  std::vector<std::size_t> off(U(no) + 1, 0);
  for (int x = 0; x < no; ++x) off[U(x) + 1] = off[U(x)] + H.with_left(phi.f0[U(x)]).size();
  std::vector<std::string> labels;
  std::vector<int> lm, rm, arrow;
  for (int x = 0; x < no; ++x)
    for (int h : H.with_left(phi.f0[U(x)])) {
      labels.push_back("(" + K.objects().label(x) + "," + H.arrows().label(h) + ")");
      lm.push_back(x);
      rm.push_back(H.r(h));
      arrow.push_back(h);
    }
  auto idx = [&](int x, int h) { return static_cast<int>(off[U(x)] + U(H.pos_in_left(h))); };
  return Bibundle(
      phi.source, phi.target, FinSet(std::move(labels)), std::move(lm), std::move(rm),
      [&](int k, int m) { return idx(K.l(k), H.comp(phi.f1[U(k)], arrow[U(m)])); },
      [&](int m, int h) {
        int x = static_cast<int>(std::upper_bound(off.begin(), off.end(), U(m)) - off.begin()) - 1;
        return idx(x, H.comp(arrow[U(m)], h));
      });
}

Bibundle opposite(const Bibundle& M) {
  const auto& G = M.G();
  const auto& H = M.H();
  Bibundle op(M.right(), M.left(), M.carrier(), M.rm_table(), M.lm_table(),
              [&](int h, int m) { return M.act_right(m, H.inv(h)); },
              [&](int m, int g) { return M.act_left(G.inv(g), m); });
  return op;
}

Bibundle tensor(const Bibundle& M, const Bibundle& N) {
  auto GG = product(M.left(), N.left());
  auto HH = product(M.right(), N.right());
  const int nn = static_cast<int>(N.size());
  const int g2o = static_cast<int>(N.G().num_objects()), h2o = static_cast<int>(N.H().num_objects());
  const int g2a = static_cast<int>(N.G().num_arrows()), h2a = static_cast<int>(N.H().num_arrows());
  std::vector<std::string> labels;
  std::vector<int> lm, rm;
  labels.reserve(M.size() * N.size());
  for (int m = 0; m < static_cast<int>(M.size()); ++m)
    for (int n = 0; n < nn; ++n) {
      labels.push_back(M.label(m) + "," + N.label(n));
      lm.push_back(M.lm(m) * g2o + N.lm(n));
      rm.push_back(M.rm(m) * h2o + N.rm(n));
    }
  return Bibundle(
      GG, HH, FinSet(std::move(labels)), std::move(lm), std::move(rm),
      [&](int a, int p) { return M.act_left(a / g2a, p / nn) * nn + N.act_left(a % g2a, p % nn); },
      [&](int p, int b) { return M.act_right(p / nn, b / h2a) * nn + N.act_right(p % nn, b % h2a); });
}

Bibundle permute_carrier(const Bibundle& M, const std::vector<int>& perm,
                         const std::vector<std::string>& labels) {
  const std::size_t n = M.size();
  if (perm.size() != n || labels.size() != n) throw StructuralError("permute_carrier: size mismatch");
  std::vector<int> inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] < 0 || U(perm[i]) >= n || inv[U(perm[i])] >= 0)
      throw StructuralError("permute_carrier: not a permutation");
    inv[U(perm[i])] = static_cast<int>(i);
  }
  std::vector<int> lm(n), rm(n);
  for (std::size_t j = 0; j < n; ++j) {
    lm[j] = M.lm(inv[j]);
    rm[j] = M.rm(inv[j]);
  }
  return Bibundle(
      M.left(), M.right(), FinSet(labels), std::move(lm), std::move(rm),
      [&](int g, int j) { return perm[U(M.act_left(g, inv[U(j)]))]; },
      [&](int j, int h) { return perm[U(M.act_right(inv[U(j)], h))]; });
}

// ---------------------------------------------------------------------------

bool check_iso(const IsoWitness& W, const Bibundle& A, const Bibundle& B) {
  if (!same_groupoid(A.left(), B.left()) || !same_groupoid(A.right(), B.right())) return false;
  const std::size_t n = A.size();
  if (B.size() != n || W.forward.size() != n || W.backward.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    int f = W.forward[i];
    if (f < 0 || U(f) >= n || W.backward[U(f)] != static_cast<int>(i)) return false;
  }
  for (int a = 0; a < static_cast<int>(n); ++a) {
    int b = W.forward[U(a)];
    if (A.lm(a) != B.lm(b) || A.rm(a) != B.rm(b)) return false;
    for (int g : A.G().with_right(A.lm(a)))
      if (W.forward[U(A.act_left(g, a))] != B.act_left(g, b)) return false;
    for (int h : A.H().with_left(A.rm(a)))
      if (W.forward[U(A.act_right(a, h))] != B.act_right(b, h)) return false;
  }
  return true;
}

IsoWitness identity_witness(const Bibundle& A) {
  IsoWitness W;
  for (int i = 0; i < static_cast<int>(A.size()); ++i) W.forward.push_back(i);
  W.backward = W.forward;
  return W;
}

IsoWitness vertical(const IsoWitness& W, const IsoWitness& V) {
  IsoWitness R;
  for (int x : W.forward) R.forward.push_back(V.forward.at(U(x)));
  for (int y : V.backward) R.backward.push_back(W.backward.at(U(y)));
  return R;
}

IsoWitness invert(const IsoWitness& W) { return {W.backward, W.forward}; }

IsoWitness horizontal(const ComposedBibundle& src, const ComposedBibundle& dst,
                      const IsoWitness& phi, const IsoWitness& psi) {
  IsoWitness R;
  for (std::size_t c = 0; c < src.rep_m.size(); ++c)
    R.forward.push_back(dst.proj(phi.forward.at(U(src.rep_m[c])), psi.forward.at(U(src.rep_n[c]))));
  for (std::size_t c = 0; c < dst.rep_m.size(); ++c)
    R.backward.push_back(src.proj(phi.backward.at(U(dst.rep_m[c])), psi.backward.at(U(dst.rep_n[c]))));
  return R;
}

IsoWitness tensor_map(const IsoWitness& phi, const IsoWitness& psi) {
  const int nb = static_cast<int>(psi.forward.size());
  IsoWitness R;
  for (int a : phi.forward)
    for (int b : psi.forward) R.forward.push_back(a * nb + b);
  for (int a : phi.backward)
    for (int b : psi.backward) R.backward.push_back(a * nb + b);
  return R;
}

IsoWitness left_unit_witness(const ComposedBibundle& IdM, const Bibundle& M) {
  IsoWitness W;
  for (std::size_t c = 0; c < IdM.rep_m.size(); ++c)
    W.forward.push_back(M.act_left(IdM.rep_m[c], IdM.rep_n[c]));
  for (int m = 0; m < static_cast<int>(M.size()); ++m)
    W.backward.push_back(IdM.proj(M.G().unit(M.lm(m)), m));
  return W;
}

IsoWitness right_unit_witness(const ComposedBibundle& MId, const Bibundle& M) {
  IsoWitness W;
  for (std::size_t c = 0; c < MId.rep_m.size(); ++c)
    W.forward.push_back(M.act_right(MId.rep_m[c], MId.rep_n[c]));
  for (int m = 0; m < static_cast<int>(M.size()); ++m)
    W.backward.push_back(MId.proj(m, M.H().unit(M.rm(m))));
  return W;
}

IsoWitness associator_witness(const ComposedBibundle& MN, const ComposedBibundle& MN_L,
                              const ComposedBibundle& NL, const ComposedBibundle& M_NL) {
  IsoWitness W;
  for (std::size_t c = 0; c < MN_L.rep_m.size(); ++c) {
    int x = MN_L.rep_m[c], l = MN_L.rep_n[c];
    W.forward.push_back(M_NL.proj(MN.rep_m[U(x)], NL.proj(MN.rep_n[U(x)], l)));
  }
  for (std::size_t c = 0; c < M_NL.rep_m.size(); ++c) {
    int m = M_NL.rep_m[c], y = M_NL.rep_n[c];
    W.backward.push_back(MN_L.proj(MN.proj(m, NL.rep_m[U(y)]), NL.rep_n[U(y)]));
  }
  return W;
}

IsoWitness interchange_witness(const ComposedBibundle& AB_CD, const ComposedBibundle& AC,
                               const ComposedBibundle& BD, std::size_t b_size, std::size_t d_size) {
  const int nb = static_cast<int>(b_size), nd = static_cast<int>(d_size);
  const int nbd = static_cast<int>(BD.rep_m.size());
  IsoWitness W;
  for (std::size_t c = 0; c < AB_CD.rep_m.size(); ++c) {
    int x = AB_CD.rep_m[c], y = AB_CD.rep_n[c];
    W.forward.push_back(AC.proj(x / nb, y / nd) * nbd + BD.proj(x % nb, y % nd));
  }
  for (int t = 0; t < static_cast<int>(AC.rep_m.size()) * nbd; ++t) {
    int i = t / nbd, j = t % nbd;
    W.backward.push_back(AB_CD.proj(AC.rep_m[U(i)] * nb + BD.rep_m[U(j)],
                                    AC.rep_n[U(i)] * nd + BD.rep_n[U(j)]));
  }
  return W;
}

// ---------------------------------------------------------------------------
// Iso search

namespace {

struct Signature {
  int l, r, lstab, rstab;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Bibundle& A) {
  std::vector<Signature> s;
  for (int a = 0; a < static_cast<int>(A.size()); ++a) {
    int ls = 0, rs = 0;
    for (int g : A.G().with_right(A.lm(a))) ls += A.act_left(g, a) == a;
    for (int h : A.H().with_left(A.rm(a))) rs += A.act_right(a, h) == a;
    s.push_back({A.lm(a), A.rm(a), ls, rs});
  }
  return s;
}

class IsoSearch {
 public:
  IsoSearch(const Bibundle& A, const Bibundle& B, bool exhaustive, std::size_t cap)
      : A_(A), B_(B), exhaustive_(exhaustive), cap_(cap) {}

  std::vector<IsoWitness> run() {
    if (!same_groupoid(A_.left(), B_.left()) || !same_groupoid(A_.right(), B_.right()))
      return {};
    const std::size_t n = A_.size();
    if (B_.size() != n) return {};
    sa_ = signatures(A_);
    sb_ = signatures(B_);
    auto x = sa_, y = sb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return {};
    fwd_.assign(n, -1);
    bwd_.assign(n, -1);
    dfs(0);
    return found_;
  }

 private:
  // Assigns a -> b and everything forced by the two actions. Returns false
  // on a clash; the trail records what to undo either way.
  bool propagate(int a, int b) {
    std::vector<std::pair<int, int>> queue{{a, b}};
    if (!set(a, b)) return false;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [x, y] = queue[q];
      for (int g : A_.G().with_right(A_.lm(x))) {
        int x2 = A_.act_left(g, x), y2 = B_.act_left(g, y);
        if (fwd_[U(x2)] == y2) continue;
        if (!set(x2, y2)) return false;
        queue.emplace_back(x2, y2);
      }
      for (int h : A_.H().with_left(A_.rm(x))) {
        int x2 = A_.act_right(x, h), y2 = B_.act_right(y, h);
        if (fwd_[U(x2)] == y2) continue;
        if (!set(x2, y2)) return false;
        queue.emplace_back(x2, y2);
      }
    }
    return true;
  }

  bool set(int x, int y) {
    if (fwd_[U(x)] >= 0 || bwd_[U(y)] >= 0) return false;
    if (sa_[U(x)] != sb_[U(y)]) return false;
    fwd_[U(x)] = y;
    bwd_[U(y)] = x;
    trail_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int x = trail_.back();
      trail_.pop_back();
      bwd_[U(fwd_[U(x)])] = -1;
      fwd_[U(x)] = -1;
    }
  }

  // Returns false when the search should stop.
  bool dfs(int start) {
    int a = start;
    while (a < static_cast<int>(fwd_.size()) && fwd_[U(a)] >= 0) ++a;
    if (a == static_cast<int>(fwd_.size())) {
      found_.push_back({fwd_, bwd_});
      return exhaustive_ && found_.size() < cap_;
    }
    for (int b = 0; b < static_cast<int>(bwd_.size()); ++b) {
      if (bwd_[U(b)] >= 0 || sa_[U(a)] != sb_[U(b)]) continue;
      std::size_t mark = trail_.size();
      bool ok = propagate(a, b);
      bool go_on = ok ? dfs(a + 1) : true;
      undo(mark);
      if (!go_on) return false;
      // Orbits are independent: once one orbit has matched, a dead end
      // further down means there is no isomorphism at all.
      if (ok && !exhaustive_) return false;
    }
    return exhaustive_;
  }

  const Bibundle& A_;
  const Bibundle& B_;
  bool exhaustive_;
  std::size_t cap_;
  std::vector<Signature> sa_, sb_;
  std::vector<int> fwd_, bwd_, trail_;
  std::vector<IsoWitness> found_;
};

}  // namespace

std::optional<IsoWitness> find_iso(const Bibundle& A, const Bibundle& B) {
  auto r = IsoSearch(A, B, false, 1).run();
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::vector<IsoWitness> find_all_isos(const Bibundle& A, const Bibundle& B, std::size_t cap) {
  return IsoSearch(A, B, true, cap).run();
}

bool isomorphic(const Bibundle& A, const Bibundle& B) { return find_iso(A, B).has_value(); }

WeakIsoResult is_weak_isomorphism(const Bibundle& M) {
  WeakIsoResult res;
  res.right = check_principal(M, Side::Right);
  res.left = check_principal(M, Side::Left);
  if (!res.right.all() || !res.left.all()) return res;
  Bibundle inv = opposite(M);
  auto c1 = compose(M, inv);
  auto c2 = compose(inv, M);
  res.unit_g = find_iso(c1.bundle, identity_bibundle(M.left()));
  res.unit_h = find_iso(c2.bundle, identity_bibundle(M.right()));
  res.weak_iso = res.unit_g.has_value() && res.unit_h.has_value();
  res.inverse = std::move(inv);
  return res;
}

}  // namespace bibu
