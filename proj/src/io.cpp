#include "bibucalc/io.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bibu {

namespace fs = std::filesystem;

namespace {

std::size_t U(int x) { return static_cast<std::size_t>(x); }

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw StructuralError(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::vector<std::string> label_list(const Json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be a list of labels");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw StructuralError(std::string(what) + " must be a list of labels");
    out.push_back(x.get<std::string>());
  }
  return out;
}

// label-keyed object -> dense table over `dom`, values looked up in `cod`
std::vector<int> label_map(const Json& j, const FinSet& dom, const FinSet& cod, const char* what) {
  if (!j.is_object()) throw StructuralError(std::string(what) + " must be an object");
  std::vector<int> out(dom.size(), -1);
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw StructuralError(std::string(what) + ": value for \"" + k + "\" is not a label");
    out[U(dom.at(k, what))] = cod.at(v.get<std::string>(), what);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < 0) throw StructuralError(std::string(what) + ": no entry for \"" + dom.label(static_cast<int>(i)) + "\"");
  return out;
}

std::vector<std::array<int, 3>> triple_list(const Json& j, const FinSet& a, const FinSet& b,
                                            const FinSet& c, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be a list of triples");
  std::vector<std::array<int, 3>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
      throw StructuralError(std::string(what) + ": every entry must be three labels");
    out.push_back({a.at(t[0].get<std::string>(), what), b.at(t[1].get<std::string>(), what),
                   c.at(t[2].get<std::string>(), what)});
  }
  return out;
}

Json object_map(const std::vector<int>& table, const FinSet& dom, const FinSet& cod) {
  Json o = Json::object();
  for (std::size_t i = 0; i < table.size(); ++i) o[dom.label(static_cast<int>(i))] = cod.label(table[i]);
  return o;
}

Json labels_json(const FinSet& s) { return Json(s.labels()); }

std::string first_violation(const ValidationReport& r) {
  std::string w;
  for (const auto& s : r.violations.front().witness) w += " " + s;
  return r.violations.front().axiom + " fails at" + w;
}

}  // namespace

// ---------------------------------------------------------------------------
// Writers

Json category_to_json(const FinCategory& c) {
  Json j;
  j["objects"] = labels_json(c.objects());
  j["arrows"] = labels_json(c.arrows());
  j["l"] = object_map(c.l_table(), c.arrows(), c.objects());
  j["r"] = object_map(c.r_table(), c.arrows(), c.objects());
  Json comp = Json::array();
  for (const auto& t : c.triples())
    comp.push_back({c.arrows().label(t[0]), c.arrows().label(t[1]), c.arrows().label(t[2])});
  j["comp"] = std::move(comp);
  j["unit"] = object_map(c.unit_table(), c.objects(), c.arrows());
  return j;
}

Json groupoid_to_json(const FinGroupoid& g) {
  Json j = category_to_json(g);
  Json unit = std::move(j["unit"]);
  j.erase("unit");
  j["inv"] = object_map(g.inv_table(), g.arrows(), g.arrows());
  j["unit"] = std::move(unit);
  return j;
}

Json bibundle_to_json(const Bibundle& M, const Json& left_ref, const Json& right_ref) {
  Json j;
  j["leftGroupoid"] = left_ref.is_null() ? groupoid_to_json(M.G()) : left_ref;
  j["rightGroupoid"] = right_ref.is_null() ? groupoid_to_json(M.H()) : right_ref;
  j["carrier"] = labels_json(M.carrier());
  j["lM"] = object_map(M.lm_table(), M.carrier(), M.G().objects());
  j["rM"] = object_map(M.rm_table(), M.carrier(), M.H().objects());
  Json la = Json::array(), ra = Json::array();
  for (const auto& t : M.left_triples())
    la.push_back({M.G().arrows().label(t[0]), M.label(t[1]), M.label(t[2])});
  for (const auto& t : M.right_triples())
    ra.push_back({M.label(t[0]), M.H().arrows().label(t[1]), M.label(t[2])});
  j["leftAct"] = std::move(la);
  j["rightAct"] = std::move(ra);
  if (!M.provenance.empty()) j["provenance"] = M.provenance;
  return j;
}

Json hom_to_json(const GroupoidHom& phi, const Json& source_ref, const Json& target_ref) {
  Json j;
  j["source"] = source_ref.is_null() ? groupoid_to_json(*phi.source) : source_ref;
  j["target"] = target_ref.is_null() ? groupoid_to_json(*phi.target) : target_ref;
  j["f0"] = object_map(phi.f0, phi.source->objects(), phi.target->objects());
  j["f1"] = object_map(phi.f1, phi.source->arrows(), phi.target->arrows());
  return j;
}

Json sset_to_json(const TruncatedSSet& X) {
  Json j;
  Json levels = Json::array();
  for (const auto& l : X.levels) levels.push_back(labels_json(l));
  j["levels"] = std::move(levels);
  Json faces = Json::array(), degens = Json::array();
  for (int n = 1; n <= X.top(); ++n)
    for (int i = 0; i <= n; ++i)
      faces.push_back({{"n", n}, {"i", i},
                       {"map", object_map(X.face[U(n)][U(i)], X.levels[U(n)], X.levels[U(n - 1)])}});
  for (int n = 0; n < X.top(); ++n)
    for (int i = 0; i <= n; ++i)
      degens.push_back({{"n", n}, {"i", i},
                        {"map", object_map(X.degen[U(n)][U(i)], X.levels[U(n)], X.levels[U(n + 1)])}});
  j["faces"] = std::move(faces);
  j["degeneracies"] = std::move(degens);
  return j;
}

Json witness_to_json(const IsoWitness& W, const Bibundle& A, const Bibundle& B) {
  return Json{{"forward", object_map(W.forward, A.carrier(), B.carrier())}};
}

Json pairing_to_json(const Bibundle& M, const Pairing& P) {
  Json entries = Json::array();
  for (int m = 0; m < static_cast<int>(M.size()); ++m)
    for (int m2 = 0; m2 < static_cast<int>(M.size()); ++m2)
      if (P.at(m, m2) >= 0) entries.push_back({M.label(m), M.label(m2), M.H().arrows().label(P.at(m, m2))});
  return Json{{"entries", std::move(entries)}};
}

Json report_to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return Json{{"ok", r.ok()}, {"violations", std::move(v)}};
}

Json principality_to_json(const PrincipalityReport& r) {
  Json j;
  j["P1"] = r.p1;
  j["P2"] = r.p2;
  j["P3"] = r.p3;
  j["principal"] = r.all();
  if (!r.w1.empty()) j["P1_witness"] = r.w1;
  if (!r.w2.empty()) j["P2_witness"] = r.w2;
  if (!r.w3.empty()) j["P3_witness"] = r.w3;
  if (r.empty_fiber) j["empty_fiber"] = true;
  return j;
}

std::string sha256_bytes(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string sha256_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_bytes(ss.str());
}

void write_json(const fs::path& p, const Json& j) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + p.string());
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Loader

fs::path Loader::resolve(const std::string& name, const fs::path& base) const {
  fs::path p(name);
  if (p.is_absolute()) return p;
  fs::path here = base.empty() ? p : base / p;
  if (fs::exists(here)) return here;
  if (const char* dir = std::getenv("BIBUCALC_FIXTURES"); dir && *dir) {
    fs::path there = fs::path(dir) / p;
    if (fs::exists(there)) return there;
  }
  return here;
}

Json Loader::read(const fs::path& p, const fs::path& base) {
  fs::path full = resolve(p.string(), base);
  std::ifstream in(full, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + full.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  std::string shown = full.lexically_normal().string();
  bool seen = false;
  for (const auto& [name, digest] : inputs_) seen = seen || name == shown;
  if (!seen) inputs_.emplace_back(shown, sha256_bytes(bytes));
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw StructuralError(full.string() + ": " + e.what());
  }
}

std::pair<Json, fs::path> Loader::deref(const Json& ref, const fs::path& base) {
  if (ref.is_string()) {
    fs::path full = resolve(ref.get<std::string>(), base);
    return {read(full), full.parent_path()};
  }
  return {ref, base};
}

FinCategory Loader::category(const Json& j) {
  FinSet objects(label_list(field(j, "objects", "groupoid"), "objects"));
  FinSet arrows(label_list(field(j, "arrows", "groupoid"), "arrows"));
  auto l = label_map(field(j, "l", "groupoid"), arrows, objects, "l");
  auto r = label_map(field(j, "r", "groupoid"), arrows, objects, "r");
  auto unit = label_map(field(j, "unit", "groupoid"), objects, arrows, "unit");
  auto comp = triple_list(field(j, "comp", "groupoid"), arrows, arrows, arrows, "comp");
  return FinCategory::from_triples(std::move(objects), std::move(arrows), std::move(l), std::move(r),
                                   std::move(unit), comp);
}

GroupoidPtr Loader::groupoid(const Json& ref, const fs::path& base, bool check) {
  std::string key;
  if (ref.is_string()) {
    key = fs::weakly_canonical(resolve(ref.get<std::string>(), base)).string() + (check ? "" : "#raw");
    if (auto it = groupoid_cache_.find(key); it != groupoid_cache_.end()) return it->second;
  }
  auto [j, dir] = deref(ref, base);
  GroupoidPtr g;
  if (j.is_object() && j.contains("power")) {
    const Json& p = j.at("power");
    int n = field(p, "n", "power").get<int>();
    if (n < 0) throw StructuralError("power: exponent must be non-negative");
    g = power(groupoid(field(p, "base", "power"), dir, check), n);
  } else {
    FinCategory cat = category(j);
    std::vector<int> inv;
    if (j.contains("inv")) {
      inv = label_map(j.at("inv"), cat.arrows(), cat.arrows(), "inv");
    } else {
      // read the inverses off the composition table
      inv.assign(cat.num_arrows(), -1);
      for (const auto& t : cat.triples())
        if (t[2] == cat.unit(cat.l(t[0])) && cat.comp(t[1], t[0]) == cat.unit(cat.r(t[0]))) inv[U(t[0])] = t[1];
      for (std::size_t a = 0; a < inv.size(); ++a)
        if (inv[a] < 0)
          throw StructuralError("groupoid: arrow \"" + cat.arrows().label(static_cast<int>(a)) + "\" has no inverse");
    }
    g = std::make_shared<const FinGroupoid>(std::move(cat), std::move(inv));
    if (check) {
      auto rep = validate_groupoid(*g);
      if (!rep.ok()) throw StructuralError("invalid groupoid: " + first_violation(rep));
    }
  }
  if (!key.empty()) groupoid_cache_[key] = g;
  return g;
}

Bibundle Loader::bibundle(const Json& ref, const fs::path& base) {
  auto [j, dir] = deref(ref, base);
  auto G = groupoid(field(j, "leftGroupoid", "bibundle"), dir);
  auto H = groupoid(field(j, "rightGroupoid", "bibundle"), dir);
  FinSet carrier(label_list(field(j, "carrier", "bibundle"), "carrier"));
  auto lm = label_map(field(j, "lM", "bibundle"), carrier, G->objects(), "lM");
  auto rm = label_map(field(j, "rM", "bibundle"), carrier, H->objects(), "rM");
  auto la = triple_list(field(j, "leftAct", "bibundle"), G->arrows(), carrier, carrier, "leftAct");
  auto ra = triple_list(field(j, "rightAct", "bibundle"), carrier, H->arrows(), carrier, "rightAct");
  Bibundle M = Bibundle::from_triples(G, H, std::move(carrier), std::move(lm), std::move(rm), la, ra);
  if (j.contains("provenance") && j.at("provenance").is_string()) M.provenance = j.at("provenance").get<std::string>();
  return M;
}

GroupoidHom Loader::hom(const Json& ref, const fs::path& base) {
  auto [j, dir] = deref(ref, base);
  GroupoidHom phi;
  phi.source = groupoid(field(j, "source", "hom"), dir);
  phi.target = groupoid(field(j, "target", "hom"), dir);
  phi.f0 = label_map(field(j, "f0", "hom"), phi.source->objects(), phi.target->objects(), "f0");
  phi.f1 = label_map(field(j, "f1", "hom"), phi.source->arrows(), phi.target->arrows(), "f1");
  return phi;
}

TruncatedSSet Loader::sset(const Json& ref, const fs::path& base) {
  auto [j, dir] = deref(ref, base);
  TruncatedSSet X;
  for (const auto& lvl : field(j, "levels", "simplicial set")) X.levels.emplace_back(label_list(lvl, "level"));
  if (X.levels.empty()) throw StructuralError("simplicial set: no levels");
  const int k = X.top();
  X.face.resize(U(k + 1));
  X.degen.resize(U(k + 1));
  for (int n = 0; n <= k; ++n) {
    if (n > 0) X.face[U(n)].resize(U(n + 1));
    if (n < k) X.degen[U(n)].resize(U(n + 1));
  }
  auto load = [&](const char* key, bool is_face) {
    for (const auto& e : field(j, key, "simplicial set")) {
      int n = field(e, "n", key).get<int>(), i = field(e, "i", key).get<int>();
      int target = is_face ? n - 1 : n + 1;
      if (n < 0 || n > k || target < 0 || target > k || i < 0 || i > n)
        throw StructuralError(std::string(key) + ": index (" + std::to_string(n) + "," + std::to_string(i) + ") out of range");
      auto& slot = is_face ? X.face[U(n)][U(i)] : X.degen[U(n)][U(i)];
      slot = label_map(field(e, "map", key), X.levels[U(n)], X.levels[U(target)], key);
    }
  };
  load("faces", true);
  load("degeneracies", false);
  for (int n = 0; n <= k; ++n) {
    for (const auto& f : X.face[U(n)])
      if (f.empty() && X.count(n) > 0) throw StructuralError("simplicial set: missing face map at level " + std::to_string(n));
    for (const auto& s : X.degen[U(n)])
      if (s.empty() && X.count(n) > 0) throw StructuralError("simplicial set: missing degeneracy at level " + std::to_string(n));
  }
  return X;
}

StackyGroupData Loader::stacky(const Json& ref, const fs::path& base) {
  auto [j, dir] = deref(ref, base);
  StackyGroupData D{groupoid(field(j, "groupoid", "stacky group"), dir),
                    bibundle(field(j, "mu", "stacky group"), dir),
                    bibundle(field(j, "e", "stacky group"), dir),
                    std::nullopt, {}, {}, {}};
  if (j.contains("i")) D.i = bibundle(j.at("i"), dir);
  D.env();  // checks that the structure bibundles live over the right powers
  return D;
}

}  // namespace bibu
