#include "bibucalc/groupoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace bibu {

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void byte(unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  }
  void num(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  void str(const std::string& s) {
    num(s.size());
    for (char c : s) byte(static_cast<unsigned char>(c));
  }
  void vec(const std::vector<int>& v) {
    num(v.size());
    for (int x : v) num(static_cast<std::uint64_t>(static_cast<std::int64_t>(x)));
  }
};

void check_range(const std::vector<int>& v, std::size_t n, std::size_t expect, const char* what) {
  if (v.size() != expect) throw StructuralError(std::string(what) + " table has wrong length");
  for (int x : v)
    if (x < 0 || static_cast<std::size_t>(x) >= n)
      throw StructuralError(std::string(what) + " table has an entry out of range");
}

}  // namespace

FinCategory::FinCategory(FinSet objects, FinSet arrows, std::vector<int> l, std::vector<int> r,
                         std::vector<int> unit, const CompFn& comp)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      l_(std::move(l)),
      r_(std::move(r)),
      unit_(std::move(unit)) {
  index_moments();
  for (std::size_t g = 0; g < arrows_.size(); ++g) {
    for (int h : with_left(r_[g])) {
      int gh = comp(static_cast<int>(g), h);
      if (gh < 0 || static_cast<std::size_t>(gh) >= arrows_.size())
        throw StructuralError("composite of '" + arrows_.label(static_cast<int>(g)) + "' and '" +
                              arrows_.label(h) + "' is missing");
      comp_[comp_offset_[g] + static_cast<std::size_t>(pos_in_left(h))] = gh;
    }
  }
  rehash(0);
}

FinCategory FinCategory::from_triples(FinSet objects, FinSet arrows, std::vector<int> l,
                                      std::vector<int> r, std::vector<int> unit,
                                      std::span<const std::array<int, 3>> triples) {
  FinCategory c;
  c.objects_ = std::move(objects);
  c.arrows_ = std::move(arrows);
  c.l_ = std::move(l);
  c.r_ = std::move(r);
  c.unit_ = std::move(unit);
  c.index_moments();
  const int n = static_cast<int>(c.arrows_.size());
  for (const auto& t : triples) {
    for (int x : t)
      if (x < 0 || x >= n) throw StructuralError("comp entry refers to an unknown arrow");
    if (!c.composable(t[0], t[1]))
      throw StructuralError("comp entry for non-composable pair ('" + c.arrows_.label(t[0]) +
                            "', '" + c.arrows_.label(t[1]) + "')");
    int& slot = c.comp_[c.comp_offset_[static_cast<std::size_t>(t[0])] +
                        static_cast<std::size_t>(c.pos_in_left(t[1]))];
    if (slot >= 0)
      throw StructuralError("duplicate comp entry for ('" + c.arrows_.label(t[0]) + "', '" +
                            c.arrows_.label(t[1]) + "')");
    slot = t[2];
  }
  for (int g = 0; g < n; ++g)
    for (int h : c.with_left(c.r(g)))
      if (c.comp_[c.comp_offset_[static_cast<std::size_t>(g)] +
                  static_cast<std::size_t>(c.pos_in_left(h))] < 0)
        throw StructuralError("comp has no entry for composable pair ('" + c.arrows_.label(g) +
                              "', '" + c.arrows_.label(h) + "')");
  c.rehash(0);
  return c;
}

void FinCategory::index_moments() {
  const std::size_t no = objects_.size(), na = arrows_.size();
  check_range(l_, no, na, "l");
  check_range(r_, no, na, "r");
  check_range(unit_, na, no, "unit");
  by_left_.assign(no, {});
  by_right_.assign(no, {});
  pos_left_.assign(na, 0);
  pos_right_.assign(na, 0);
  for (std::size_t g = 0; g < na; ++g) {
    auto& bl = by_left_[static_cast<std::size_t>(l_[g])];
    pos_left_[g] = static_cast<int>(bl.size());
    bl.push_back(static_cast<int>(g));
    auto& br = by_right_[static_cast<std::size_t>(r_[g])];
    pos_right_[g] = static_cast<int>(br.size());
    br.push_back(static_cast<int>(g));
  }
  comp_offset_.assign(na + 1, 0);
  for (std::size_t g = 0; g < na; ++g)
    comp_offset_[g + 1] = comp_offset_[g] + by_left_[static_cast<std::size_t>(r_[g])].size();
  comp_.assign(comp_offset_[na], -1);
}

void FinCategory::rehash(std::uint64_t extra) {
  Fnv f;
  for (const auto& s : objects_.labels()) f.str(s);
  for (const auto& s : arrows_.labels()) f.str(s);
  f.vec(l_);
  f.vec(r_);
  f.vec(unit_);
  f.vec(comp_);
  f.num(extra);
  hash_ = f.h;
}

int FinCategory::comp(int g, int h) const {
  if (!composable(g, h))
    throw StructuralError("composition of non-composable arrows '" + arrows_.label(g) + "', '" +
                          arrows_.label(h) + "'");
  return comp_[comp_offset_[static_cast<std::size_t>(g)] + static_cast<std::size_t>(pos_in_left(h))];
}

std::vector<std::array<int, 3>> FinCategory::triples() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(comp_.size());
  for (int g = 0; g < static_cast<int>(num_arrows()); ++g) {
    std::vector<int> hs(with_left(r(g)).begin(), with_left(r(g)).end());
    for (int h : hs) out.push_back({g, h, comp(g, h)});
  }
  return out;
}

bool FinCategory::operator==(const FinCategory& o) const {
  return hash_ == o.hash_ && objects_ == o.objects_ && arrows_ == o.arrows_ && l_ == o.l_ &&
         r_ == o.r_ && unit_ == o.unit_ && comp_ == o.comp_;
}

ValidationReport FinCategory::validate() const { return validate_category(*this); }

FinGroupoid::FinGroupoid(FinCategory cat, std::vector<int> inv)
    : FinCategory(std::move(cat)), inv_(std::move(inv)) {
  check_range(inv_, num_arrows(), num_arrows(), "inv");
  Fnv f;
  f.num(hash_);
  f.vec(inv_);
  hash_ = f.h;
}

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport rep;
  const int na = static_cast<int>(c.num_arrows());
  auto A = [&](int g) { return c.arrows().label(g); };
  for (int x = 0; x < static_cast<int>(c.num_objects()); ++x) {
    int u = c.unit(x);
    if (c.l(u) != x || c.r(u) != x) rep.note("unit-moment", {c.objects().label(x), A(u)});
  }
  for (int g = 0; g < na; ++g) {
    for (int h : c.with_left(c.r(g))) {
      int gh = c.comp(g, h);
      if (c.l(gh) != c.l(g) || c.r(gh) != c.r(h)) rep.note("comp-moment", {A(g), A(h), A(gh)});
    }
  }
  if (rep.mentions("comp-moment") || rep.mentions("unit-moment")) return rep;
  for (int g = 0; g < na; ++g) {
    if (c.comp(c.unit(c.l(g)), g) != g) rep.note("left-unit", {A(g)});
    if (c.comp(g, c.unit(c.r(g))) != g) rep.note("right-unit", {A(g)});
  }
  for (int g = 0; g < na && !rep.mentions("associativity"); ++g)
    for (int h : c.with_left(c.r(g))) {
      int gh = c.comp(g, h);
      for (int k : c.with_left(c.r(h)))
        if (c.comp(gh, k) != c.comp(g, c.comp(h, k))) {
          rep.note("associativity", {A(g), A(h), A(k)});
          break;
        }
      if (rep.mentions("associativity")) break;
    }
  return rep;
}

ValidationReport validate_groupoid(const FinGroupoid& G) {
  ValidationReport rep = validate_category(G);
  for (int g = 0; g < static_cast<int>(G.num_arrows()); ++g) {
    int gi = G.inv(g);
    bool ok = G.composable(g, gi) && G.composable(gi, g) && G.comp(g, gi) == G.unit(G.l(g)) &&
              G.comp(gi, g) == G.unit(G.r(g));
    if (!ok) rep.note("inverse", {G.arrows().label(g), G.arrows().label(gi)});
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return v;
}

GroupoidPtr make(FinCategory cat, std::vector<int> inv) {
  return std::make_shared<const FinGroupoid>(std::move(cat), std::move(inv));
}

}  // namespace

GroupoidPtr unit_groupoid() {
  static const GroupoidPtr u =
      make(FinCategory(FinSet({"*"}), FinSet({"1"}), {0}, {0}, {0}, [](int, int) { return 0; }),
           {0});
  return u;
}

GroupoidPtr trivial(int n) {
  if (n < 0) throw StructuralError("trivial: negative size");
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::string> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back("1_" + std::to_string(i));
  return make(FinCategory(FinSet(numbered(n)), FinSet(arrows), id, id, id,
                          [](int g, int) { return g; }),
              id);
}

GroupoidPtr pair(int n) {
  if (n < 0) throw StructuralError("pair: negative size");
  std::vector<std::string> arrows;
  std::vector<int> l, r, unit(static_cast<std::size_t>(n)), inv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      arrows.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      l.push_back(i);
      r.push_back(j);
      inv.push_back(j * n + i);
    }
  for (int i = 0; i < n; ++i) unit[static_cast<std::size_t>(i)] = i * n + i;
  auto comp = [n](int g, int h) { return (g / n) * n + h % n; };
  return make(FinCategory(FinSet(numbered(n)), FinSet(arrows), l, r, unit, comp), inv);
}

GroupoidPtr cyclic(int n) {
  if (n < 1) throw StructuralError("cyclic: order must be positive");
  std::vector<int> zero(static_cast<std::size_t>(n), 0), inv;
  for (int k = 0; k < n; ++k) inv.push_back((n - k) % n);
  return make(FinCategory(FinSet({"*"}), FinSet(numbered(n)), zero, zero, {0},
                          [n](int a, int b) { return (a + b) % n; }),
              inv);
}

GroupoidPtr one_object(const std::vector<std::string>& labels,
                       const std::vector<std::vector<int>>& mult, std::string object) {
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(mult.size()) != n) throw StructuralError("group table has wrong size");
  for (const auto& row : mult) check_range(row, labels.size(), labels.size(), "group");
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      ok = mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == y &&
           mult[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] == y;
    if (ok) e = x;
  }
  if (e < 0) throw StructuralError("group table has no identity");
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == e &&
          mult[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] == e)
        inv[static_cast<std::size_t>(x)] = y;
  for (int x = 0; x < n; ++x)
    if (inv[static_cast<std::size_t>(x)] < 0)
      throw StructuralError("element '" + labels[static_cast<std::size_t>(x)] + "' has no inverse");
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  return make(FinCategory(FinSet({std::move(object)}), FinSet(labels), zero, zero, {e},
                          [&](int a, int b) {
                            return mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                          }),
              inv);
}

GroupoidPtr action_groupoid(const GroupoidPtr& group, const FinSet& carrier,
                            const std::function<int(int, int)>& act) {
  const auto& K = *group;
  if (K.num_objects() != 1) throw StructuralError("action_groupoid: acting groupoid must have one object");
  const int nk = static_cast<int>(K.num_arrows()), nz = static_cast<int>(carrier.size());
  std::vector<int> table(static_cast<std::size_t>(nk * nz));
  for (int k = 0; k < nk; ++k)
    for (int z = 0; z < nz; ++z) {
      int w = act(k, z);
      if (w < 0 || w >= nz) throw StructuralError("action_groupoid: action leaves the carrier");
      table[static_cast<std::size_t>(k * nz + z)] = w;
    }
  auto T = [&](int k, int z) { return table[static_cast<std::size_t>(k * nz + z)]; };
  for (int z = 0; z < nz; ++z)
    if (T(K.unit(0), z) != z)
      throw StructuralError("action_groupoid: unit does not act trivially on '" + carrier.label(z) + "'");
  for (int a = 0; a < nk; ++a)
    for (int b = 0; b < nk; ++b)
      for (int z = 0; z < nz; ++z)
        if (T(a, T(b, z)) != T(K.comp(a, b), z))
          throw StructuralError("action_groupoid: action law fails at (" + K.arrows().label(a) + ", " +
                                K.arrows().label(b) + ", " + carrier.label(z) + ")");
  std::vector<std::string> arrows;
  std::vector<int> l, r, unit(static_cast<std::size_t>(nz)), inv;
  for (int k = 0; k < nk; ++k)
    for (int z = 0; z < nz; ++z) {
      arrows.push_back("(" + K.arrows().label(k) + "," + carrier.label(z) + ")");
      l.push_back(T(k, z));
      r.push_back(z);
      inv.push_back(K.inv(k) * nz + T(k, z));
    }
  for (int z = 0; z < nz; ++z) unit[static_cast<std::size_t>(z)] = K.unit(0) * nz + z;
  auto comp = [&](int g, int h) { return K.comp(g / nz, h / nz) * nz + h % nz; };
  return make(FinCategory(carrier, FinSet(arrows), l, r, unit, comp), inv);
}

namespace {

GroupoidPtr build_product(const FinGroupoid& G, const FinGroupoid& H) {
  const int go = static_cast<int>(G.num_objects()), ho = static_cast<int>(H.num_objects());
  const int ga = static_cast<int>(G.num_arrows()), ha = static_cast<int>(H.num_arrows());
  std::vector<std::string> objs, arrs;
  for (int a = 0; a < go; ++a)
    for (int b = 0; b < ho; ++b) objs.push_back(G.objects().label(a) + "," + H.objects().label(b));
  std::vector<int> l, r, unit, inv;
  for (int a = 0; a < ga; ++a)
    for (int b = 0; b < ha; ++b) {
      arrs.push_back(G.arrows().label(a) + "," + H.arrows().label(b));
      l.push_back(G.l(a) * ho + H.l(b));
      r.push_back(G.r(a) * ho + H.r(b));
      inv.push_back(G.inv(a) * ha + H.inv(b));
    }
  for (int a = 0; a < go; ++a)
    for (int b = 0; b < ho; ++b) unit.push_back(G.unit(a) * ha + H.unit(b));
  auto comp = [&](int g, int h) {
    return G.comp(g / ha, h / ha) * ha + H.comp(g % ha, h % ha);
  };
  return make(FinCategory(FinSet(objs), FinSet(arrs), l, r, unit, comp), inv);
}

// Keeps the factors alive so the raw-pointer key can never be recycled.
struct ProductCache {
  std::mutex mu;
  std::map<std::pair<const FinGroupoid*, const FinGroupoid*>,
           std::tuple<GroupoidPtr, GroupoidPtr, GroupoidPtr>>
      entries;
};

ProductCache& product_cache() {
  static ProductCache c;
  return c;
}

}  // namespace

GroupoidPtr product(const GroupoidPtr& g, const GroupoidPtr& h) {
  if (same_groupoid(g, unit_groupoid())) return h;
  if (same_groupoid(h, unit_groupoid())) return g;
  auto& cache = product_cache();
  std::pair key{g.get(), h.get()};
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return std::get<2>(it->second);
  }
  GroupoidPtr p = build_product(*g, *h);
  std::lock_guard lock(cache.mu);
  auto [it, fresh] = cache.entries.emplace(key, std::tuple{g, h, p});
  return std::get<2>(it->second);
}

GroupoidPtr power(const GroupoidPtr& g, int n) {
  if (n < 0) throw StructuralError("power: negative exponent");
  GroupoidPtr acc = unit_groupoid();
  for (int i = 0; i < n; ++i) acc = product(acc, g);
  return acc;
}

GroupoidPtr opposite_groupoid(const GroupoidPtr& gp) {
  const auto& G = *gp;
  return make(FinCategory(G.objects(), G.arrows(), G.r_table(), G.l_table(), G.unit_table(),
                          [&](int a, int b) { return G.comp(b, a); }),
              G.inv_table());
}

GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts) {
  std::vector<std::string> objects, arrows;
  std::vector<int> l, r, unit, inv, part_of, arrow_base;
  int ob = 0, ab = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& P = *parts[k];
    const std::string tag = std::to_string(k) + ":";
    for (const auto& x : P.objects().labels()) objects.push_back(tag + x);
    for (int g = 0; g < static_cast<int>(P.num_arrows()); ++g) {
      arrows.push_back(tag + P.arrows().label(g));
      l.push_back(ob + P.l(g));
      r.push_back(ob + P.r(g));
      inv.push_back(ab + P.inv(g));
      part_of.push_back(static_cast<int>(k));
    }
    for (int x = 0; x < static_cast<int>(P.num_objects()); ++x) unit.push_back(ab + P.unit(x));
    arrow_base.push_back(ab);
    ob += static_cast<int>(P.num_objects());
    ab += static_cast<int>(P.num_arrows());
  }
  auto comp = [&](int g, int h) {
    auto k = static_cast<std::size_t>(part_of[static_cast<std::size_t>(g)]);
    int base = arrow_base[k];
    return base + parts[k]->comp(g - base, h - base);
  };
  return make(FinCategory(FinSet(objects), FinSet(arrows), l, r, unit, comp), inv);
}

GroupoidPtr full_subgroupoid(const GroupoidPtr& gp, const std::vector<int>& objects) {
  const auto& G = *gp;
  std::vector<int> oidx(G.num_objects(), -1);
  std::vector<std::string> olabels;
  for (int x : objects) {
    if (x < 0 || x >= static_cast<int>(G.num_objects()) || oidx[static_cast<std::size_t>(x)] >= 0)
      throw StructuralError("full_subgroupoid: bad object list");
    oidx[static_cast<std::size_t>(x)] = static_cast<int>(olabels.size());
    olabels.push_back(G.objects().label(x));
  }
  std::vector<int> aidx(G.num_arrows(), -1), keep;
  std::vector<std::string> alabels;
  std::vector<int> l, r, unit, inv;
  for (int g = 0; g < static_cast<int>(G.num_arrows()); ++g)
    if (oidx[static_cast<std::size_t>(G.l(g))] >= 0 && oidx[static_cast<std::size_t>(G.r(g))] >= 0) {
      aidx[static_cast<std::size_t>(g)] = static_cast<int>(keep.size());
      keep.push_back(g);
      alabels.push_back(G.arrows().label(g));
      l.push_back(oidx[static_cast<std::size_t>(G.l(g))]);
      r.push_back(oidx[static_cast<std::size_t>(G.r(g))]);
    }
  for (int g : keep) inv.push_back(aidx[static_cast<std::size_t>(G.inv(g))]);
  for (int x : objects) unit.push_back(aidx[static_cast<std::size_t>(G.unit(x))]);
  auto comp = [&](int a, int b) {
    return aidx[static_cast<std::size_t>(G.comp(keep[static_cast<std::size_t>(a)],
                                                  keep[static_cast<std::size_t>(b)]))];
  };
  return make(FinCategory(FinSet(olabels), FinSet(alabels), l, r, unit, comp), inv);
}

// ---------------------------------------------------------------------------

ValidationReport check_hom(const GroupoidHom& phi) {
  ValidationReport rep;
  const auto& S = *phi.source;
  const auto& T = *phi.target;
  if (phi.f0.size() != S.num_objects() || phi.f1.size() != S.num_arrows())
    throw StructuralError("homomorphism tables are not total");
  for (int x : phi.f0)
    if (x < 0 || x >= static_cast<int>(T.num_objects()))
      throw StructuralError("homomorphism object image out of range");
  for (int g : phi.f1)
    if (g < 0 || g >= static_cast<int>(T.num_arrows()))
      throw StructuralError("homomorphism arrow image out of range");
  auto F0 = [&](int x) { return phi.f0[static_cast<std::size_t>(x)]; };
  auto F1 = [&](int g) { return phi.f1[static_cast<std::size_t>(g)]; };
  for (int g = 0; g < static_cast<int>(S.num_arrows()); ++g) {
    if (T.l(F1(g)) != F0(S.l(g))) rep.note("hom-l", {S.arrows().label(g)});
    if (T.r(F1(g)) != F0(S.r(g))) rep.note("hom-r", {S.arrows().label(g)});
  }
  for (int x = 0; x < static_cast<int>(S.num_objects()); ++x)
    if (F1(S.unit(x)) != T.unit(F0(x))) rep.note("hom-unit", {S.objects().label(x)});
  if (rep.mentions("hom-l") || rep.mentions("hom-r")) return rep;
  for (const auto& [g, h, gh] : S.triples())
    if (T.comp(F1(g), F1(h)) != F1(gh)) {
      rep.note("hom-comp", {S.arrows().label(g), S.arrows().label(h)});
      break;
    }
  return rep;
}

GroupoidHom identity_hom(const GroupoidPtr& g) {
  GroupoidHom h{g, g, std::vector<int>(g->num_objects()), std::vector<int>(g->num_arrows())};
  std::iota(h.f0.begin(), h.f0.end(), 0);
  std::iota(h.f1.begin(), h.f1.end(), 0);
  return h;
}

GroupoidHom compose_homs(const GroupoidHom& phi, const GroupoidHom& psi) {
  if (!same_groupoid(phi.target, psi.source))
    throw StructuralError("compose_homs: target and source differ");
  GroupoidHom h{phi.source, psi.target, {}, {}};
  for (int x : phi.f0) h.f0.push_back(psi.f0[static_cast<std::size_t>(x)]);
  for (int g : phi.f1) h.f1.push_back(psi.f1[static_cast<std::size_t>(g)]);
  return h;
}

GroupoidHom pairing_hom(const GroupoidHom& phi, const GroupoidHom& psi) {
  if (!same_groupoid(phi.source, psi.source))
    throw StructuralError("pairing_hom: sources differ");
  GroupoidHom h{phi.source, product(phi.target, psi.target), {}, {}};
  const int to = static_cast<int>(psi.target->num_objects());
  const int ta = static_cast<int>(psi.target->num_arrows());
  for (std::size_t x = 0; x < phi.f0.size(); ++x) h.f0.push_back(phi.f0[x] * to + psi.f0[x]);
  for (std::size_t g = 0; g < phi.f1.size(); ++g) h.f1.push_back(phi.f1[g] * ta + psi.f1[g]);
  return h;
}

GroupoidHom diagonal_hom(const GroupoidPtr& g) {
  auto id = identity_hom(g);
  return pairing_hom(id, id);
}

GroupoidHom terminal_hom(const GroupoidPtr& g) {
  return {g, unit_groupoid(), std::vector<int>(g->num_objects(), 0),
          std::vector<int>(g->num_arrows(), 0)};
}

GroupoidHom product_hom(const GroupoidHom& phi, const GroupoidHom& psi) {
  GroupoidHom h{product(phi.source, psi.source), product(phi.target, psi.target), {}, {}};
  const int so = static_cast<int>(psi.source->num_objects()), sa = static_cast<int>(psi.source->num_arrows());
  const int to = static_cast<int>(psi.target->num_objects()), ta = static_cast<int>(psi.target->num_arrows());
  for (int x = 0; x < static_cast<int>(h.source->num_objects()); ++x)
    h.f0.push_back(phi.f0[static_cast<std::size_t>(x / so)] * to + psi.f0[static_cast<std::size_t>(x % so)]);
  for (int g = 0; g < static_cast<int>(h.source->num_arrows()); ++g)
    h.f1.push_back(phi.f1[static_cast<std::size_t>(g / sa)] * ta + psi.f1[static_cast<std::size_t>(g % sa)]);
  return h;
}

GroupoidHom flip_hom(const GroupoidPtr& g, const GroupoidPtr& h) {
  GroupoidHom f{product(g, h), product(h, g), {}, {}};
  const int go = static_cast<int>(g->num_objects()), ho = static_cast<int>(h->num_objects());
  const int ga = static_cast<int>(g->num_arrows()), ha = static_cast<int>(h->num_arrows());
  for (int x = 0; x < go * ho; ++x) f.f0.push_back((x % ho) * go + x / ho);
  for (int a = 0; a < ga * ha; ++a) f.f1.push_back((a % ha) * ga + a / ha);
  return f;
}

bool groupoids_isomorphic(const FinGroupoid& a, const FinGroupoid& b) {
  if (a.num_objects() != b.num_objects() || a.num_arrows() != b.num_arrows()) return false;
  const int n = static_cast<int>(a.num_arrows());
  std::vector<int> amap(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);
  std::vector<int> omap(a.num_objects(), -1), oused(a.num_objects(), 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // identities first so object images get fixed early
  std::stable_partition(order.begin(), order.end(), [&](int g) { return a.unit(a.l(g)) == g; });
  auto M = [&](int g) { return amap[static_cast<std::size_t>(g)]; };
  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    int g = order[k];
    const bool is_unit = a.unit(a.l(g)) == g;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || is_unit != (b.unit(b.l(c)) == c)) continue;
      if ((a.l(g) == a.r(g)) != (b.l(c) == b.r(c))) continue;
      bool ok = true;
      std::vector<int> newo;
      for (auto [x, y] : {std::pair{a.l(g), b.l(c)}, std::pair{a.r(g), b.r(c)}}) {
        int& ox = omap[static_cast<std::size_t>(x)];
        if (ox >= 0) {
          ok = ok && ox == y;
        } else if (oused[static_cast<std::size_t>(y)]) {
          ok = false;
        } else {
          ox = y;
          oused[static_cast<std::size_t>(y)] = 1;
          newo.push_back(x);
        }
      }
      amap[static_cast<std::size_t>(g)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      for (std::size_t i = 0; i <= k && ok; ++i)
        for (std::size_t j = 0; j <= k && ok; ++j) {
          int p = order[i], q = order[j];
          if (!a.composable(p, q)) continue;
          int pq = a.comp(p, q);
          if (p != g && q != g && pq != g) continue;
          if (M(pq) < 0) continue;
          ok = b.composable(M(p), M(q)) && b.comp(M(p), M(q)) == M(pq);
        }
      if (ok && dfs(k + 1)) return true;
      amap[static_cast<std::size_t>(g)] = -1;
      used[static_cast<std::size_t>(c)] = 0;
      for (int x : newo) {
        oused[static_cast<std::size_t>(omap[static_cast<std::size_t>(x)])] = 0;
        omap[static_cast<std::size_t>(x)] = -1;
      }
    }
    return false;
  };
  return dfs(0);
}

}  // namespace bibu
