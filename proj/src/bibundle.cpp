#include "bibucalc/bibundle.hpp"

namespace bibu {

namespace {

void check_moment(const std::vector<int>& v, std::size_t n, std::size_t expect, const char* what) {
  if (v.size() != expect) throw StructuralError(std::string(what) + " moment has wrong length");
  for (int x : v)
    if (x < 0 || static_cast<std::size_t>(x) >= n)
      throw StructuralError(std::string(what) + " moment has an entry out of range");
}

}  // namespace

void Bibundle::index() {
  if (!G_ || !H_) throw StructuralError("bibundle without base groupoids");
  const std::size_t n = carrier_.size();
  check_moment(lm_, G_->num_objects(), n, "left");
  check_moment(rm_, H_->num_objects(), n, "right");
  loff_.assign(n + 1, 0);
  roff_.assign(n + 1, 0);
  for (std::size_t m = 0; m < n; ++m) {
    loff_[m + 1] = loff_[m] + G_->with_right(lm_[m]).size();
    roff_[m + 1] = roff_[m] + H_->with_left(rm_[m]).size();
  }
  lact_.assign(loff_[n], -1);
  ract_.assign(roff_[n], -1);
  fib_l_.assign(G_->num_objects(), {});
  fib_r_.assign(H_->num_objects(), {});
  pos_l_.assign(n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    auto& f = fib_l_[static_cast<std::size_t>(lm_[m])];
    pos_l_[m] = static_cast<int>(f.size());
    f.push_back(static_cast<int>(m));
    fib_r_[static_cast<std::size_t>(rm_[m])].push_back(static_cast<int>(m));
  }
}

Bibundle::Bibundle(GroupoidPtr left, GroupoidPtr right, FinSet carrier, std::vector<int> lmap,
                   std::vector<int> rmap, const LeftFn& left_fn, const RightFn& right_fn)
    : G_(std::move(left)), H_(std::move(right)), carrier_(std::move(carrier)), lm_(std::move(lmap)),
      rm_(std::move(rmap)) {
  index();
  const int n = static_cast<int>(carrier_.size());
  for (int m = 0; m < n; ++m) {
    for (int g : G_->with_right(lm(m))) {
      int v = left_fn(g, m);
      if (v < 0 || v >= n) throw StructuralError("left action leaves the carrier at ('" +
                                                 G_->arrows().label(g) + "', '" + label(m) + "')");
      lact_[lslot(g, m)] = v;
    }
    for (int h : H_->with_left(rm(m))) {
      int v = right_fn(m, h);
      if (v < 0 || v >= n) throw StructuralError("right action leaves the carrier at ('" +
                                                  label(m) + "', '" + H_->arrows().label(h) + "')");
      ract_[rslot(m, h)] = v;
    }
  }
}

Bibundle Bibundle::from_triples(GroupoidPtr left, GroupoidPtr right, FinSet carrier,
                                std::vector<int> lm, std::vector<int> rm,
                                std::span<const std::array<int, 3>> left_triples,
                                std::span<const std::array<int, 3>> right_triples) {
  Bibundle b;
  b.G_ = std::move(left);
  b.H_ = std::move(right);
  b.carrier_ = std::move(carrier);
  b.lm_ = std::move(lm);
  b.rm_ = std::move(rm);
  b.index();
  const int n = static_cast<int>(b.size());
  const int ga = static_cast<int>(b.G_->num_arrows()), ha = static_cast<int>(b.H_->num_arrows());
  for (const auto& [g, m, v] : left_triples) {
    if (g < 0 || g >= ga || m < 0 || m >= n || v < 0 || v >= n)
      throw StructuralError("leftAct entry out of range");
    if (!b.left_defined(g, m))
      throw StructuralError("leftAct entry for undefined pair ('" + b.G_->arrows().label(g) +
                            "', '" + b.label(m) + "')");
    int& slot = b.lact_[b.lslot(g, m)];
    if (slot >= 0) throw StructuralError("duplicate leftAct entry for ('" + b.G_->arrows().label(g) +
                                         "', '" + b.label(m) + "')");
    slot = v;
  }
  for (const auto& [m, h, v] : right_triples) {
    if (h < 0 || h >= ha || m < 0 || m >= n || v < 0 || v >= n)
      throw StructuralError("rightAct entry out of range");
    if (!b.right_defined(m, h))
      throw StructuralError("rightAct entry for undefined pair ('" + b.label(m) + "', '" +
                            b.H_->arrows().label(h) + "')");
    int& slot = b.ract_[b.rslot(m, h)];
    if (slot >= 0) throw StructuralError("duplicate rightAct entry for ('" + b.label(m) + "', '" +
                                         b.H_->arrows().label(h) + "')");
    slot = v;
  }
  for (int m = 0; m < n; ++m) {
    for (int g : b.G_->with_right(b.lm(m)))
      if (b.lact_[b.lslot(g, m)] < 0)
        throw StructuralError("leftAct missing ('" + b.G_->arrows().label(g) + "', '" + b.label(m) + "')");
    for (int h : b.H_->with_left(b.rm(m)))
      if (b.ract_[b.rslot(m, h)] < 0)
        throw StructuralError("rightAct missing ('" + b.label(m) + "', '" + b.H_->arrows().label(h) + "')");
  }
  return b;
}

int Bibundle::act_left(int g, int m) const {
  if (g < 0 || g >= static_cast<int>(G_->num_arrows()) || m < 0 || m >= static_cast<int>(size()))
    throw StructuralError("left action: index out of range");
  if (!left_defined(g, m))
    throw StructuralError("left action undefined at ('" + G_->arrows().label(g) + "', '" + label(m) + "')");
  return lact_[lslot(g, m)];
}

int Bibundle::act_right(int m, int h) const {
  if (h < 0 || h >= static_cast<int>(H_->num_arrows()) || m < 0 || m >= static_cast<int>(size()))
    throw StructuralError("right action: index out of range");
  if (!right_defined(m, h))
    throw StructuralError("right action undefined at ('" + label(m) + "', '" + H_->arrows().label(h) + "')");
  return ract_[rslot(m, h)];
}

void Bibundle::set_left(int g, int m, int value) {
  if (!left_defined(g, m) || value < 0 || value >= static_cast<int>(size()))
    throw StructuralError("set_left outside the domain");
  lact_[lslot(g, m)] = value;
}

void Bibundle::set_right(int m, int h, int value) {
  if (!right_defined(m, h) || value < 0 || value >= static_cast<int>(size()))
    throw StructuralError("set_right outside the domain");
  ract_[rslot(m, h)] = value;
}

std::vector<std::array<int, 3>> Bibundle::left_triples() const {
  std::vector<std::array<int, 3>> out;
  for (int g = 0; g < static_cast<int>(G_->num_arrows()); ++g)
    for (int m : fiber_l(G_->r(g))) out.push_back({g, m, act_left(g, m)});
  return out;
}

std::vector<std::array<int, 3>> Bibundle::right_triples() const {
  std::vector<std::array<int, 3>> out;
  for (int m = 0; m < static_cast<int>(size()); ++m)
    for (int h : H_->with_left(rm(m))) out.push_back({m, h, act_right(m, h)});
  return out;
}

bool Bibundle::operator==(const Bibundle& o) const {
  return same_groupoid(G_, o.G_) && same_groupoid(H_, o.H_) && carrier_ == o.carrier_ &&
         lm_ == o.lm_ && rm_ == o.rm_ && lact_ == o.lact_ && ract_ == o.ract_;
}

ValidationReport validate_bibundle(const Bibundle& M) {
  ValidationReport rep;
  const auto& G = M.G();
  const auto& H = M.H();
  const int n = static_cast<int>(M.size());
  auto GA = [&](int g) { return G.arrows().label(g); };
  auto HA = [&](int h) { return H.arrows().label(h); };
  auto L = [&](int m) { return M.label(m); };
  for (int m = 0; m < n; ++m) {
    if (M.act_left(G.unit(M.lm(m)), m) != m) rep.note("left-unit", {L(m)});
    if (M.act_right(m, H.unit(M.rm(m))) != m) rep.note("right-unit", {L(m)});
    for (int g : G.with_right(M.lm(m))) {
      int gm = M.act_left(g, m);
      if (M.lm(gm) != G.l(g)) rep.note("left-moment", {GA(g), L(m)});
      if (M.rm(gm) != M.rm(m)) rep.note("right-moment-invariance", {GA(g), L(m)});
    }
    for (int h : H.with_left(M.rm(m))) {
      int mh = M.act_right(m, h);
      if (M.rm(mh) != H.r(h)) rep.note("right-moment", {L(m), HA(h)});
      if (M.lm(mh) != M.lm(m)) rep.note("left-moment-invariance", {L(m), HA(h)});
    }
  }
  // Compatibility checks below need the moment equations to even be defined.
  if (!rep.ok()) return rep;
  for (int m = 0; m < n; ++m) {
    for (int g2 : G.with_right(M.lm(m))) {
      int a = M.act_left(g2, m);
      for (int g1 : G.with_right(G.l(g2)))
        if (M.act_left(g1, a) != M.act_left(G.comp(g1, g2), m))
          rep.note("left-associativity", {GA(g1), GA(g2), L(m)});
    }
    for (int h1 : H.with_left(M.rm(m))) {
      int a = M.act_right(m, h1);
      for (int h2 : H.with_left(H.r(h1)))
        if (M.act_right(a, h2) != M.act_right(m, H.comp(h1, h2)))
          rep.note("right-associativity", {L(m), HA(h1), HA(h2)});
    }
    for (int g : G.with_right(M.lm(m)))
      for (int h : H.with_left(M.rm(m)))
        if (M.act_right(M.act_left(g, m), h) != M.act_left(g, M.act_right(m, h)))
          rep.note("commuting", {GA(g), L(m), HA(h)});
  }
  return rep;
}

PrincipalityReport check_principal(const Bibundle& M, Side side) {
  PrincipalityReport rep;
  const auto& G = M.G();
  const auto& H = M.H();
  const int n = static_cast<int>(M.size());
  if (side == Side::Right) {
    for (int x = 0; x < static_cast<int>(G.num_objects()); ++x)
      if (M.fiber_l(x).empty()) {
        rep.empty_fiber = true;
        if (rep.p1) {
          rep.p1 = false;
          rep.w1 = {G.objects().label(x)};
        }
      }
    for (int m = 0; m < n && rep.p2; ++m)
      for (int h : H.with_left(M.rm(m)))
        if (h != H.unit(M.rm(m)) && M.act_right(m, h) == m) {
          rep.p2 = false;
          rep.w2 = {M.label(m), H.arrows().label(h)};
          break;
        }
    std::vector<char> reach(static_cast<std::size_t>(n));
    for (int m = 0; m < n && rep.p3; ++m) {
      std::fill(reach.begin(), reach.end(), 0);
      for (int h : H.with_left(M.rm(m))) reach[static_cast<std::size_t>(M.act_right(m, h))] = 1;
      for (int m2 : M.fiber_l(M.lm(m)))
        if (!reach[static_cast<std::size_t>(m2)]) {
          rep.p3 = false;
          rep.w3 = {M.label(m), M.label(m2)};
          break;
        }
    }
  } else {
    for (int y = 0; y < static_cast<int>(H.num_objects()); ++y)
      if (M.fiber_r(y).empty()) {
        rep.empty_fiber = true;
        if (rep.p1) {
          rep.p1 = false;
          rep.w1 = {H.objects().label(y)};
        }
      }
    for (int m = 0; m < n && rep.p2; ++m)
      for (int g : G.with_right(M.lm(m)))
        if (g != G.unit(M.lm(m)) && M.act_left(g, m) == m) {
          rep.p2 = false;
          rep.w2 = {G.arrows().label(g), M.label(m)};
          break;
        }
    std::vector<char> reach(static_cast<std::size_t>(n));
    for (int m = 0; m < n && rep.p3; ++m) {
      std::fill(reach.begin(), reach.end(), 0);
      for (int g : G.with_right(M.lm(m))) reach[static_cast<std::size_t>(M.act_left(g, m))] = 1;
      for (int m2 : M.fiber_r(M.rm(m)))
        if (!reach[static_cast<std::size_t>(m2)]) {
          rep.p3 = false;
          rep.w3 = {M.label(m), M.label(m2)};
          break;
        }
    }
  }
  return rep;
}

bool is_biprincipal(const Bibundle& M) {
  return check_principal(M, Side::Right).all() && check_principal(M, Side::Left).all();
}

PairingResult compute_pairing(const Bibundle& M) {
  PairingResult res;
  auto pr = check_principal(M, Side::Right);
  if (!pr.p2) {
    res.reason = "free";
    res.witness = pr.w2;
    return res;
  }
  if (!pr.p3) {
    res.reason = "transitive";
    res.witness = pr.w3;
    return res;
  }
  Pairing P{M.size(), std::vector<int>(M.size() * M.size(), -1)};
  const auto& H = M.H();
  for (int m = 0; m < static_cast<int>(M.size()); ++m)
    for (int h : H.with_left(M.rm(m))) P.at(m, M.act_right(m, h)) = h;
  res.pairing = std::move(P);
  return res;
}

PairingResult compute_left_pairing(const Bibundle& M) {
  PairingResult res;
  auto pr = check_principal(M, Side::Left);
  if (!pr.p2) {
    res.reason = "free";
    res.witness = pr.w2;
    return res;
  }
  if (!pr.p3) {
    res.reason = "transitive";
    res.witness = pr.w3;
    return res;
  }
  Pairing P{M.size(), std::vector<int>(M.size() * M.size(), -1)};
  const auto& G = M.G();
  for (int m = 0; m < static_cast<int>(M.size()); ++m)
    for (int g : G.with_right(M.lm(m))) P.at(M.act_left(g, m), m) = g;
  res.pairing = std::move(P);
  return res;
}

ValidationReport check_pairing_axioms(const Bibundle& M, const Pairing& P) {
  ValidationReport rep;
  const auto& G = M.G();
  const auto& H = M.H();
  const int n = static_cast<int>(M.size());
  if (P.n != M.size() || P.table.size() != M.size() * M.size())
    throw StructuralError("pairing table does not match the carrier");
  auto L = [&](int m) { return M.label(m); };
  auto HA = [&](int h) { return H.arrows().label(h); };
  for (int m = 0; m < n; ++m)
    for (int m2 : M.fiber_l(M.lm(m))) {
      int p = P.at(m, m2);
      if (p < 0 || p >= static_cast<int>(H.num_arrows()))
        throw StructuralError("pairing table undefined at ('" + L(m) + "', '" + L(m2) + "')");
      if (H.l(p) != M.rm(m) || H.r(p) != M.rm(m2)) rep.note("pairing-moment", {L(m), L(m2), HA(p)});
    }
  if (!rep.ok()) return rep;
  for (int m = 0; m < n; ++m) {
    if (P.at(m, m) != H.unit(M.rm(m))) rep.note("H3", {L(m), L(m)});
    for (int m2 : M.fiber_l(M.lm(m))) {
      int p = P.at(m, m2);
      for (int h : H.with_left(M.rm(m2)))
        if (P.at(m, M.act_right(m2, h)) != H.comp(p, h)) rep.note("H1", {L(m), L(m2), HA(h)});
      if (p != H.inv(P.at(m2, m))) rep.note("H2", {L(m), L(m2)});
      for (int m3 : M.fiber_l(M.lm(m)))
        if (m3 != m2 && P.at(m, m3) == p) rep.note("H3", {L(m), L(m2), L(m3)});
    }
    // H4: <g.m, m'> = <m, g^-1 . m'> with l(m') = l(g)
    for (int g : G.with_right(M.lm(m))) {
      int gm = M.act_left(g, m);
      for (int m2 : M.fiber_l(G.l(g)))
        if (P.at(gm, m2) != P.at(m, M.act_left(G.inv(g), m2)))
          rep.note("H4", {G.arrows().label(g), L(m), L(m2)});
    }
  }
  return rep;
}

}  // namespace bibu
