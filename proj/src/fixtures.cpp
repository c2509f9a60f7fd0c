#include "bibucalc/fixtures.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <map>
#include <set>

namespace bibu {

namespace {

std::size_t U(int x) { return static_cast<std::size_t>(x); }

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

template <class T>
const T& pick_from(Rng& rng, const std::vector<T>& v) {
  return v[U(pick(rng, static_cast<int>(v.size())))];
}

// connected component of every object
std::vector<int> components(const FinGroupoid& G) {
  std::vector<int> comp(G.num_objects());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[U(x)] != x) x = comp[U(x)] = comp[U(comp[U(x)])];
    return x;
  };
  for (int g = 0; g < static_cast<int>(G.num_arrows()); ++g) comp[U(find(G.l(g)))] = find(G.r(g));
  for (int x = 0; x < static_cast<int>(comp.size()); ++x) comp[U(x)] = find(x);
  return comp;
}

}  // namespace

GroupoidPtr symmetric3() {
  using P = std::array<int, 3>;
  const std::vector<std::string> names = {"e", "s", "t", "st", "ts", "sts"};
  auto mul = [](const P& a, const P& b) { return P{a[U(b[0])], a[U(b[1])], a[U(b[2])]}; };
  const P e{0, 1, 2}, s{1, 0, 2}, t{0, 2, 1};
  const std::vector<P> perms = {e, s, t, mul(s, t), mul(t, s), mul(s, mul(t, s))};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), mul(perms[i], perms[j])) - perms.begin());
  return one_object(names, table);
}

GroupoidPtr cyclic_action(int n, int m) {
  if (n < 1 || m < 1) throw StructuralError("cyclic_action: need n, m >= 1");
  int d = 1;
  for (int c = 1; c <= std::min(n, m); ++c)
    if (n % c == 0) d = c;
  std::vector<std::string> pts;
  for (int z = 0; z < m; ++z) pts.push_back(std::to_string(z));
  return action_groupoid(cyclic(n), FinSet(pts), [d](int k, int z) { return z < d ? (z + k) % d : z; });
}

std::vector<NamedGroupoid> standard_groupoids() {
  std::vector<NamedGroupoid> out;
  for (int n = 1; n <= 3; ++n) out.push_back({"Triv(" + std::to_string(n) + ")", trivial(n)});
  for (int n = 2; n <= 3; ++n) out.push_back({"Pair(" + std::to_string(n) + ")", pair(n)});
  for (int n = 2; n <= 5; ++n) out.push_back({"Cyc(" + std::to_string(n) + ")", cyclic(n)});
  out.push_back({"Z/2 on 3 points", cyclic_action(2, 3)});
  out.push_back({"Z/3 on 4 points", cyclic_action(3, 4)});
  return out;
}

GroupoidPtr random_groupoid(Rng& rng, int max_arrows) {
  if (max_arrows < 1) throw StructuralError("random_groupoid: need at least one arrow");
  static const std::vector<GroupoidPtr> groups = {
      cyclic(1), cyclic(2), cyclic(3), cyclic(4), product(cyclic(2), cyclic(2)), symmetric3()};
  std::vector<GroupoidPtr> parts;
  int budget = max_arrows;
  const int want = 1 + pick(rng, 3);
  for (int tries = 0; static_cast<int>(parts.size()) < want && tries < 20; ++tries) {
    int n = 1 + pick(rng, 3);
    const auto& K = pick_from(rng, groups);
    int size = n * n * static_cast<int>(K->num_arrows());
    if (size > budget) continue;
    parts.push_back(product(pair(n), K));
    budget -= size;
  }
  if (parts.empty()) parts.push_back(trivial(1));
  return parts.size() == 1 ? parts.front() : disjoint_union(parts);
}

GroupoidHom random_hom(Rng& rng, const GroupoidPtr& Gp, const GroupoidPtr& Hp) {
  const auto& G = *Gp;
  const auto& H = *Hp;
  GroupoidHom phi{Gp, Hp, std::vector<int>(G.num_objects(), -1), std::vector<int>(G.num_arrows(), -1)};
  if (G.num_objects() == 0) return phi;
  if (H.num_objects() == 0) throw StructuralError("random_hom: empty target");
  // objects: each component of G lands in one random component of H
  auto gc = components(G), hc = components(H);
  std::map<int, int> chosen;
  for (int x = 0; x < static_cast<int>(G.num_objects()); ++x) {
    if (!chosen.count(gc[U(x)])) chosen[gc[U(x)]] = hc[U(pick(rng, static_cast<int>(H.num_objects())))];
    std::vector<int> in;
    for (int y = 0; y < static_cast<int>(H.num_objects()); ++y)
      if (hc[U(y)] == chosen[gc[U(x)]]) in.push_back(y);
    phi.f0[U(x)] = pick_from(rng, in);
  }
  // arrows: randomized backtracking with a node budget
  std::vector<std::vector<std::array<int, 3>>> involving(G.num_arrows());
  for (const auto& t : G.triples())
    for (int a : t) involving[U(a)].push_back(t);
  auto& f = phi.f1;
  long budget = 20000;
  auto rec = [&](auto&& self, int g) -> bool {
    if (g == static_cast<int>(G.num_arrows())) return true;
    if (--budget < 0) return false;
    std::vector<int> cand;
    for (int h : H.with_left(phi.f0[U(G.l(g))]))
      if (H.r(h) == phi.f0[U(G.r(g))]) cand.push_back(h);
    std::shuffle(cand.begin(), cand.end(), rng);
    for (int h : cand) {
      if (G.unit(G.l(g)) == g && h != H.unit(H.l(h))) continue;
      f[U(g)] = h;
      bool ok = true;
      for (const auto& t : involving[U(g)]) {
        if (f[U(t[0])] < 0 || f[U(t[1])] < 0 || f[U(t[2])] < 0) continue;
        if (H.comp(f[U(t[0])], f[U(t[1])]) != f[U(t[2])]) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, g + 1)) return true;
      f[U(g)] = -1;
      if (budget < 0) return false;
    }
    return false;
  };
  if (rec(rec, 0)) return phi;
  // Fallback that always works: pick tau_x : f0(x0) -> f0(x) per component
  // and send g to tau_{l g} tau_{r g}^-1.
  std::vector<int> tau(G.num_objects(), -1);
  std::map<int, int> base;
  for (int x = 0; x < static_cast<int>(G.num_objects()); ++x) {
    int x0 = base.emplace(gc[U(x)], x).first->second;
    std::vector<int> cand;
    for (int h : H.with_left(phi.f0[U(x)]))
      if (H.r(h) == phi.f0[U(x0)]) cand.push_back(h);
    tau[U(x)] = x == x0 ? H.unit(phi.f0[U(x)]) : pick_from(rng, cand);
  }
  for (int g = 0; g < static_cast<int>(G.num_arrows()); ++g)
    f[U(g)] = H.comp(tau[U(G.l(g))], H.inv(tau[U(G.r(g))]));
  return phi;
}

GroupoidHom conjugate_hom(Rng& rng, const GroupoidHom& phi) {
  const auto& G = *phi.source;
  const auto& H = *phi.target;
  std::vector<int> a(G.num_objects());
  GroupoidHom out{phi.source, phi.target, {}, {}};
  for (int x = 0; x < static_cast<int>(G.num_objects()); ++x) {
    auto cand = H.with_right(phi.f0[U(x)]);
    a[U(x)] = cand[U(pick(rng, static_cast<int>(cand.size())))];
    out.f0.push_back(H.l(a[U(x)]));
  }
  for (int g = 0; g < static_cast<int>(G.num_arrows()); ++g)
    out.f1.push_back(H.comp(H.comp(a[U(G.l(g))], phi.f1[U(g)]), H.inv(a[U(G.r(g))])));
  return out;
}

Bibundle shuffle_carrier(Rng& rng, const Bibundle& M) {
  std::vector<int> perm(M.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(M.size());
  for (std::size_t i = 0; i < perm.size(); ++i) labels[U(perm[i])] = M.label(static_cast<int>(i));
  return permute_carrier(M, perm, labels);
}

Bibundle random_bibundle(Rng& rng, const GroupoidPtr& G, const GroupoidPtr& H, int max_points) {
  auto K = product(G, opposite_groupoid(H));
  const int nh0 = static_cast<int>(H->num_objects()), nh1 = static_cast<int>(H->num_arrows());
  struct Orbit {
    int object;
    std::set<int> sub;
    std::vector<int> reps;
  };
  std::vector<Orbit> orbits;
  int budget = max_points;
  const int want = 1 + pick(rng, 3);
  for (int tries = 0; static_cast<int>(orbits.size()) < want && tries < 12 && K->num_objects() > 0; ++tries) {
    int xy = pick(rng, static_cast<int>(K->num_objects()));
    std::vector<int> iso;
    for (int k : K->with_right(xy))
      if (K->l(k) == xy) iso.push_back(k);
    std::set<int> sub = {K->unit(xy)};
    for (int gens = pick(rng, 3); gens > 0; --gens) sub.insert(pick_from(rng, iso));
    for (bool grew = true; grew;) {
      grew = false;
      for (int a : std::vector<int>(sub.begin(), sub.end()))
        for (int b : std::vector<int>(sub.begin(), sub.end())) grew |= sub.insert(K->comp(a, b)).second;
    }
    std::set<int> reps;
    for (int k : K->with_right(xy)) {
      int best = k;
      for (int s : sub) best = std::min(best, K->comp(k, s));
      reps.insert(best);
    }
    if (static_cast<int>(reps.size()) > budget) continue;
    budget -= static_cast<int>(reps.size());
    orbits.push_back({xy, std::move(sub), std::vector<int>(reps.begin(), reps.end())});
  }
  std::vector<std::string> labels;
  std::vector<int> lm, rm;
  std::vector<std::pair<int, int>> point;  // (orbit, rep)
  std::map<std::pair<int, int>, int> index;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int k : orbits[o].reps) {
      index[{static_cast<int>(o), k}] = static_cast<int>(labels.size());
      labels.push_back("o" + std::to_string(o) + "[" + K->arrows().label(k) + "]");
      lm.push_back(K->l(k) / nh0);
      rm.push_back(K->l(k) % nh0);
      point.emplace_back(static_cast<int>(o), k);
    }
  auto cls = [&](int o, int k) {
    int best = k;
    for (int s : orbits[U(o)].sub) best = std::min(best, K->comp(k, s));
    return index.at({o, best});
  };
  auto act_left = [&](int g, int m) {
    auto [o, k] = point[U(m)];
    return cls(o, K->comp(g * nh1 + H->unit(rm[U(m)]), k));
  };
  auto act_right = [&](int m, int h) {
    auto [o, k] = point[U(m)];
    return cls(o, K->comp(G->unit(lm[U(m)]) * nh1 + h, k));
  };
  return Bibundle(G, H, FinSet(labels), lm, rm, act_left, act_right);
}

Bibundle random_right_principal(Rng& rng, const GroupoidPtr& G, const GroupoidPtr& H) {
  return shuffle_carrier(rng, bundlize(random_hom(rng, G, H)));
}

}  // namespace bibu
