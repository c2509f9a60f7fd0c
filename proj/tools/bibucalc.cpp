// bibucalc: command-line front end.
//
// Exit codes: 0 the property holds / the input is valid, 1 it fails (a
// witness file is written under --out), 2 structural or usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>

#include "bibucalc/calculus.hpp"
#include "bibucalc/diagram.hpp"
#include "bibucalc/fixtures.hpp"
#include "bibucalc/group.hpp"
#include "bibucalc/io.hpp"
#include "bibucalc/linking.hpp"
#include "bibucalc/simplicial.hpp"

namespace fs = std::filesystem;
using namespace bibu;

namespace {

struct Run {
  bool json = false;
  std::uint64_t seed = 0;
  int max_size = 16;
  std::string out = ".";
  std::string command;
  Loader loader;
  Json report = Json::object();
  std::vector<std::string> witnesses;

  std::string witness(const std::string& name, const Json& j) {
    fs::path p = fs::path(out) / name;
    write_json(p, j);
    witnesses.push_back(p.string());
    return p.string();
  }
  std::string product(const std::string& name, const Json& j) {
    fs::path p = fs::path(out) / name;
    write_json(p, j);
    report["written"].push_back(p.string());
    return p.string();
  }
  void say(const std::string& line) {
    if (!json) std::cout << line << "\n";
  }
};

std::string yes(bool b) { return b ? "yes" : "no"; }

void say_principal(Run& run, const std::string& side, const PrincipalityReport& r) {
  run.say(side + " principal: " + yes(r.all()) + " (P1 " + yes(r.p1) + ", P2 " + yes(r.p2) + ", P3 " +
          yes(r.p3) + ")");
}

// NAME=file bindings
DiagramEnv make_env(Run& run, const std::string& groupoid, const std::string& spec,
                    const std::vector<std::string>& binds) {
  std::optional<DiagramEnv> env;
  if (!spec.empty()) {
    env = run.loader.stacky(Json(spec)).env();
  } else if (!groupoid.empty()) {
    env.emplace(run.loader.groupoid(Json(groupoid)));
  } else {
    throw CLI::ValidationError("--groupoid or --spec is required");
  }
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--bind expects NAME=file, got " + b);
    env->bind(b.substr(0, eq), run.loader.bibundle(Json(b.substr(eq + 1))));
  }
  return *env;
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) return "unknown";
  if (j.contains("leftGroupoid")) return "bibundle";
  if (j.contains("levels")) return "sset";
  if (j.contains("source") && j.contains("f1")) return "hom";
  if (j.contains("mu") && j.contains("groupoid")) return "stacky";
  if (j.contains("objects")) return j.contains("inv") ? "groupoid" : "category";
  return "unknown";
}

int do_validate(Run& run, const std::string& file, std::string kind) {
  Json j = run.loader.read(file);
  if (kind == "auto") kind = detect_kind(j);
  run.report["kind"] = kind;
  ValidationReport rep;
  fs::path dir = fs::path(file).parent_path();
  if (kind == "groupoid") {
    rep = validate_groupoid(*run.loader.groupoid(Json(file), {}, false));
  } else if (kind == "category") {
    rep = validate_category(run.loader.category(j));
  } else if (kind == "bibundle") {
    rep = validate_bibundle(run.loader.bibundle(j, dir));
  } else if (kind == "hom") {
    rep = check_hom(run.loader.hom(j, dir));
  } else if (kind == "sset") {
    rep = validate_sset(run.loader.sset(j, dir));
  } else if (kind == "stacky") {
    auto D = run.loader.stacky(j, dir);
    rep = validate_groupoid(*D.base);
    for (const auto* M : {&D.mu, &D.e})
      for (const auto& v : validate_bibundle(*M).violations) rep.add(v.axiom, v.witness);
    if (D.i)
      for (const auto& v : validate_bibundle(*D.i).violations) rep.add(v.axiom, v.witness);
  } else {
    throw StructuralError("cannot tell what kind of file " + file + " is; pass --kind");
  }
  run.report["validation"] = report_to_json(rep);
  if (rep.ok()) {
    run.say("valid " + kind);
    return 0;
  }
  for (const auto& v : rep.violations) {
    std::string w;
    for (const auto& s : v.witness) w += " " + s;
    run.say("violated: " + v.axiom + " at" + w);
  }
  run.witness("validate_witness.json", report_to_json(rep));
  return 1;
}

int do_compose(Run& run, const std::string& a, const std::string& b, const std::string& name) {
  auto M = run.loader.bibundle(Json(a));
  auto N = run.loader.bibundle(Json(b));
  auto C = compose(M, N).bundle;
  auto lab = [](const Bibundle& X, const std::string& file) {
    return X.provenance.empty() ? fs::path(file).stem().string() : "(" + X.provenance + ")";
  };
  C.provenance = lab(M, a) + " ; " + lab(N, b);
  run.report["size"] = C.size();
  run.report["provenance"] = C.provenance;
  run.product(name, bibundle_to_json(C));
  run.say("composite has " + std::to_string(C.size()) + " points");
  return 0;
}

int do_principal(Run& run, const std::string& file, const std::string& side) {
  auto M = run.loader.bibundle(Json(file));
  bool ok = true;
  Json failing = Json::object();
  for (auto [name, s] : {std::pair{"right", Side::Right}, std::pair{"left", Side::Left}}) {
    if (side != "both" && side != name) continue;
    auto r = check_principal(M, s);
    run.report[name] = principality_to_json(r);
    say_principal(run, name, r);
    if (!r.all()) failing[name] = principality_to_json(r);
    ok = ok && r.all();
  }
  if (!ok) run.witness("principal_witness.json", failing);
  return ok ? 0 : 1;
}

int do_pairing(Run& run, const std::string& file, const std::string& side) {
  auto M = run.loader.bibundle(Json(file));
  auto res = side == "left" ? compute_left_pairing(M) : compute_pairing(M);
  if (!res.pairing) {
    Json w = {{"reason", res.reason}, {"witness", res.witness}};
    run.report["pairing"] = nullptr;
    run.report["failure"] = w;
    run.say("no pairing: the action is not " + res.reason);
    run.witness("pairing_witness.json", w);
    return 1;
  }
  Json table;
  if (side == "left") {
    // G-valued: entries (m, m', g) with g . m' = m
    Json entries = Json::array();
    for (int m = 0; m < static_cast<int>(M.size()); ++m)
      for (int m2 = 0; m2 < static_cast<int>(M.size()); ++m2)
        if (res.pairing->at(m, m2) >= 0)
          entries.push_back({M.label(m), M.label(m2), M.G().arrows().label(res.pairing->at(m, m2))});
    table = {{"entries", entries}};
  } else {
    table = pairing_to_json(M, *res.pairing);
    run.report["axioms"] = report_to_json(check_pairing_axioms(M, *res.pairing));
  }
  run.report["pairing"] = table;
  run.say("pairing defined on " + std::to_string(table["entries"].size()) + " pairs");
  return 0;
}

int do_linking(Run& run, const std::string& file, bool as_groupoid) {
  auto M = run.loader.bibundle(Json(file));
  if (!as_groupoid) {
    auto L = linking_category(M);
    auto rep = validate_category(L.cat);
    run.report["category_axioms"] = report_to_json(rep);
    run.product("linking_category.json", category_to_json(L.cat));
    run.say("linking category: " + std::to_string(L.cat.num_arrows()) + " arrows, axioms " + yes(rep.ok()));
    if (!rep.ok()) {
      run.witness("linking_witness.json", report_to_json(rep));
      return 1;
    }
    return 0;
  }
  auto res = linking_groupoid(M);
  run.report["right"] = principality_to_json(res.right);
  run.report["left"] = principality_to_json(res.left);
  if (!res.groupoid) {
    run.say("not biprincipal, no linking groupoid");
    run.witness("linking_witness.json", {{"right", principality_to_json(res.right)},
                                         {"left", principality_to_json(res.left)}});
    return 1;
  }
  auto rep = validate_groupoid(*res.groupoid);
  run.report["groupoid_axioms"] = report_to_json(rep);
  run.product("linking_groupoid.json", groupoid_to_json(*res.groupoid));
  run.say("linking groupoid: " + std::to_string(res.groupoid->num_arrows()) + " arrows");
  return rep.ok() ? 0 : 1;
}

int do_morita(Run& run, const std::string& file) {
  auto M = run.loader.bibundle(Json(file));
  auto w = is_weak_isomorphism(M);
  run.report["weak_isomorphism"] = w.weak_iso;
  run.report["right"] = principality_to_json(w.right);
  run.report["left"] = principality_to_json(w.left);
  say_principal(run, "right", w.right);
  say_principal(run, "left", w.left);
  run.say("weak isomorphism: " + yes(w.weak_iso));
  if (w.weak_iso) {
    run.product("inverse.json", bibundle_to_json(*w.inverse));
    return 0;
  }
  run.witness("morita_witness.json", {{"right", principality_to_json(w.right)},
                                      {"left", principality_to_json(w.left)}});
  return 1;
}

int do_eval(Run& run, const DiagramEnv& env, const std::string& expr, const std::string& name) {
  auto ast = parse_diagram(expr);
  auto [in, out] = typecheck(ast, env);
  auto M = evaluate(ast, env);
  run.report["arity"] = {in, out};
  run.report["size"] = M.size();
  run.report["expression"] = M.provenance;
  run.product(name, bibundle_to_json(M));
  run.say(M.provenance + " : " + std::to_string(in) + " -> " + std::to_string(out) + ", " +
          std::to_string(M.size()) + " points");
  return 0;
}

int do_check(Run& run, const DiagramEnv& env, const std::string& lhs, const std::string& rhs) {
  auto w = check_identity(lhs, rhs, env);
  run.report["lhs"] = print_diagram(parse_diagram(lhs));
  run.report["rhs"] = print_diagram(parse_diagram(rhs));
  run.report["isomorphic"] = w.has_value();
  if (w) {
    run.say("isomorphic");
    return 0;
  }
  auto A = evaluate(lhs, env), B = evaluate(rhs, env);
  run.witness("check_witness.json", {{"lhs", run.report["lhs"]}, {"rhs", run.report["rhs"]},
                                     {"lhs_size", A.size()}, {"rhs_size", B.size()},
                                     {"lhs_bibundle", bibundle_to_json(A)},
                                     {"rhs_bibundle", bibundle_to_json(B)}});
  run.say("not isomorphic (" + std::to_string(A.size()) + " vs " + std::to_string(B.size()) + " points)");
  return 1;
}

int do_bundlize(Run& run, const std::string& file) {
  auto phi = run.loader.hom(Json(file));
  auto rep = check_hom(phi);
  if (!rep.ok()) {
    run.report["hom"] = report_to_json(rep);
    run.witness("bundlize_witness.json", report_to_json(rep));
    run.say("not a homomorphism: " + rep.violations.front().axiom);
    return 1;
  }
  auto M = bundlize(phi);
  run.report["size"] = M.size();
  run.product("bundlized.json", bibundle_to_json(M));
  run.say("bundlization has " + std::to_string(M.size()) + " points");
  return 0;
}

Json monoid_json(const MonoidReport& m) {
  return {{"mu_right_principal", m.mu_principal}, {"e_right_principal", m.e_principal},
          {"associator", m.ass}, {"left_unitor", m.luni}, {"right_unitor", m.runi}};
}

int do_check_group(Run& run, const std::string& spec) {
  auto D = run.loader.stacky(Json(spec));
  auto m = check_monoid(D);
  run.report["monoid"] = monoid_json(m);
  run.say("stacky monoid: " + yes(m.ok()));
  auto g = check_group(D);
  Json gj = {{"group", g.group}, {"preinverse_right", principality_to_json(g.s_right)},
             {"preinverse_left", principality_to_json(g.s_left)}};
  if (g.left_antipode) {
    gj["left_antipode"] = *g.left_antipode;
    gj["right_antipode"] = *g.right_antipode;
    gj["inverse_is_preinverse"] = *g.i_is_preinverse;
  }
  run.report["group"] = gj;
  say_principal(run, "preinverse right", g.s_right);
  say_principal(run, "preinverse left", g.s_left);
  run.say("group: " + yes(g.group));
  bool ok = m.ok() && g.group;
  if (!ok) run.witness("check_group_witness.json", run.report);
  return ok ? 0 : 1;
}

int do_preinverse(Run& run, const std::string& spec) {
  auto D = run.loader.stacky(Json(spec));
  auto s = preinverse(D);
  s.provenance = kPreinverseExpr;
  run.product("preinverse.json", bibundle_to_json(s));
  auto w = is_weak_isomorphism(s);
  run.report["weak_isomorphism"] = w.weak_iso;
  run.report["right"] = principality_to_json(w.right);
  run.report["left"] = principality_to_json(w.left);
  if (D.i) run.report["inverse_is_preinverse"] = isomorphic(*D.i, s);
  run.say("preinverse has " + std::to_string(s.size()) + " points, weak isomorphism: " + yes(w.weak_iso));
  if (!w.weak_iso) run.witness("preinverse_witness.json", run.report);
  return w.weak_iso ? 0 : 1;
}

int do_coherence(Run& run, const std::string& spec) {
  auto D = run.loader.stacky(Json(spec));
  auto m = check_monoid(D);
  run.report["monoid"] = monoid_json(m);
  if (!m.ok()) {
    run.say("structure 2-cells missing, nothing to check");
    run.witness("coherence_witness.json", run.report);
    return 1;
  }
  auto c = check_coherence(D);
  run.report["dodecagon"] = c.dodecagon;
  run.report["unit_pentagon"] = c.unit_pentagon;
  run.report["rechosen"] = c.rechosen;
  if (c.ok()) {
    run.report["associator"] = witness_to_json(*D.ass, evaluate("(mu * id) ; mu", D.env()),
                                               evaluate("(id * mu) ; mu", D.env()));
  }
  run.say("dodecagon: " + yes(c.dodecagon) + ", unit pentagon: " + yes(c.unit_pentagon) +
          (c.rechosen ? " (2-cells re-chosen)" : ""));
  if (!c.ok()) run.witness("coherence_witness.json", run.report);
  return c.ok() ? 0 : 1;
}

int do_kan(Run& run, const std::string& file, int n, int i, bool strict) {
  auto X = run.loader.sset(Json(file));
  auto rep = validate_sset(X);
  if (!rep.ok()) throw StructuralError("not a simplicial set: " + rep.violations.front().axiom);
  auto res = kan_check(X, n, i, strict);
  run.report["n"] = n;
  run.report["i"] = i;
  run.report["strict"] = strict;
  run.report["horns"] = res.horns;
  run.report["holds"] = res.holds;
  std::string what = std::string(strict ? "Kan!" : "Kan") + "(" + std::to_string(n) + "," + std::to_string(i) + ")";
  if (res.holds) {
    run.say(what + " holds over " + std::to_string(res.horns) + " horns");
    return 0;
  }
  Json w = {{"faces", horn_labels(X, n, *res.witness)}, {"fillers", res.fillers}};
  std::vector<int> idx;
  for (int j = 0; j <= n; ++j)
    if (j != i) idx.push_back(j);
  w["face_indices"] = idx;
  run.report["witness"] = w;
  std::string faces;
  for (const auto& s : horn_labels(X, n, *res.witness)) faces += " " + s;
  run.say(what + " fails: horn" + faces + " has " + std::to_string(res.fillers) + " fillers");
  run.witness("kan_witness.json", w);
  return 1;
}

// ---------------------------------------------------------------------------
// gen-fixture

struct GenParams {
  std::string family;
  int n = 2, m = 2, N = 4, q = 2, k = 3;
  std::string of = "poset";
};

// Reloads and validates every emitted file; a failure is a bug, so exit 2.
void closed_loop(Run& run, const std::string& path, const std::string& kind) {
  Loader check;
  ValidationReport rep;
  if (kind == "groupoid") rep = validate_groupoid(*check.groupoid(Json(path), {}, false));
  if (kind == "bibundle") rep = validate_bibundle(check.bibundle(Json(path)));
  if (kind == "sset") rep = validate_sset(check.sset(Json(path)));
  if (kind == "stacky") {
    auto D = check.stacky(Json(path));
    for (const auto* M : {&D.mu, &D.e, &*D.i})
      for (const auto& v : validate_bibundle(*M).violations) rep.add(v.axiom, v.witness);
  }
  if (!rep.ok()) throw StructuralError("generated " + path + " fails validation: " + rep.violations.front().axiom);
  (void)run;
}

int do_gen(Run& run, const GenParams& p) {
  Rng rng(run.seed);
  auto emit_groupoid = [&](const std::string& name, const GroupoidPtr& g) {
    closed_loop(run, run.product(name, groupoid_to_json(*g)), "groupoid");
    run.say("wrote " + name + " (" + std::to_string(g->num_arrows()) + " arrows)");
  };
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw CLI::ValidationError(msg);
  };
  const std::string& f = p.family;
  if (f == "trivial") {
    need(p.n >= 1 && p.n <= 64, "trivial: 1 <= n <= 64");
    emit_groupoid("trivial_" + std::to_string(p.n) + ".json", trivial(p.n));
  } else if (f == "pair") {
    need(p.n >= 1 && p.n <= 8, "pair: 1 <= n <= 8");
    emit_groupoid("pair_" + std::to_string(p.n) + ".json", pair(p.n));
  } else if (f == "cyclic") {
    need(p.n >= 1 && p.n <= 64, "cyclic: 1 <= n <= 64");
    emit_groupoid("cyclic_" + std::to_string(p.n) + ".json", cyclic(p.n));
  } else if (f == "action") {
    need(p.n >= 1 && p.n <= 16 && p.m >= 1 && p.m <= 16, "action: 1 <= n, m <= 16");
    emit_groupoid("action_" + std::to_string(p.n) + "_" + std::to_string(p.m) + ".json", cyclic_action(p.n, p.m));
  } else if (f == "kronecker_finite") {
    need(p.N >= 1 && p.N <= 12 && p.q >= 1 && p.N % p.q == 0, "kronecker_finite: 1 <= N <= 12 and q | N");
    auto D = kronecker_finite(p.N, p.q);
    std::string stem = "kronecker_" + std::to_string(p.N) + "_" + std::to_string(p.q);
    std::string gname = stem + "_groupoid.json";
    Json gref = gname;
    Json sq = {{"power", {{"base", gname}, {"n", 2}}}};
    Json pt = {{"power", {{"base", gname}, {"n", 0}}}};
    run.product(gname, groupoid_to_json(*D.base));
    run.product(stem + "_mu.json", bibundle_to_json(D.mu, sq, gref));
    run.product(stem + "_e.json", bibundle_to_json(D.e, pt, gref));
    run.product(stem + "_i.json", bibundle_to_json(*D.i, gref, gref));
    std::string spec = run.product(stem + ".json", {{"groupoid", gname},
                                                    {"mu", stem + "_mu.json"},
                                                    {"e", stem + "_e.json"},
                                                    {"i", stem + "_i.json"}});
    closed_loop(run, spec, "stacky");
    run.say("wrote " + stem + ".json and its groupoid, mu, e and i files");
  } else if (f == "random-groupoid") {
    need(run.max_size >= 1 && run.max_size <= 64, "random-groupoid: 1 <= --max-size <= 64");
    emit_groupoid("random_groupoid_" + std::to_string(run.seed) + ".json", random_groupoid(rng, run.max_size));
  } else if (f == "random-right-principal-bibundle") {
    need(run.max_size >= 1 && run.max_size <= 64, "random-right-principal-bibundle: 1 <= --max-size <= 64");
    auto G = random_groupoid(rng, run.max_size), H = random_groupoid(rng, run.max_size);
    auto M = random_right_principal(rng, G, H);
    std::string name = "right_principal_" + std::to_string(run.seed) + ".json";
    closed_loop(run, run.product(name, bibundle_to_json(M)), "bibundle");
    if (!check_principal(M, Side::Right).all()) throw StructuralError("generator produced a non-principal bibundle");
    run.say("wrote " + name + " (" + std::to_string(M.size()) + " points)");
  } else if (f == "nerve") {
    need(p.k >= 1 && p.k <= 4, "nerve: 1 <= k <= 4");
    TruncatedSSet X;
    std::string name;
    if (p.of == "poset") {
      X = nerve(poset_arrow(), p.k);
      name = "nerve_poset.json";
    } else if (p.of == "free-monoid") {
      X = nerve(truncated_free_monoid(), p.k);
      name = "nerve_free_monoid.json";
    } else {
      X = nerve(*run.loader.groupoid(Json(p.of)), p.k);
      name = "nerve_" + fs::path(p.of).stem().string() + ".json";
    }
    closed_loop(run, run.product(name, sset_to_json(X)), "sset");
    run.say("wrote " + name);
  } else {
    throw CLI::ValidationError("unknown family " + f);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoid bibundle calculus"};
  app.fallthrough();
  app.require_subcommand(1);
  Run run;
  app.add_flag("--json", run.json, "Print a JSON report instead of text");
  app.add_option("--seed", run.seed, "Seed for randomized generators");
  app.add_option("--max-size", run.max_size, "Size cap for generated or searched objects");
  app.add_option("--out", run.out, "Directory for outputs and witness files");

  std::function<int()> action;
  std::string file, file2, side = "right", kind = "auto", groupoid, spec, expr, lhs, rhs;
  std::string compose_name = "composite.json", eval_name = "diagram.json";
  std::vector<std::string> binds;
  bool as_groupoid = false, as_category = false, strict = false;
  int n = 2, i = 0;
  GenParams gen;

  auto* v = app.add_subcommand("validate", "Check a groupoid, category, bibundle, hom, simplicial set or stacky spec");
  v->add_option("file", file, "Input file")->required();
  v->add_option("--kind", kind, "auto|groupoid|category|bibundle|hom|sset|stacky");
  v->callback([&] { action = [&] { return do_validate(run, file, kind); }; });

  auto* c = app.add_subcommand("compose", "Compose two bibundles");
  c->add_option("first", file, "G-H bibundle")->required();
  c->add_option("second", file2, "H-K bibundle")->required();
  c->add_option("--name", compose_name, "Output file name");
  c->callback([&] { action = [&] { return do_compose(run, file, file2, compose_name); }; });

  auto* p = app.add_subcommand("principal", "Principality of a bibundle");
  p->add_option("--bibundle", file)->required();
  p->add_option("--side", side)->check(CLI::IsMember({"right", "left", "both"}));
  p->callback([&] { action = [&] { return do_principal(run, file, side); }; });

  auto* pr = app.add_subcommand("pairing", "Bibundle pairing table");
  pr->add_option("--bibundle", file)->required();
  pr->add_option("--side", side, "right: H-valued, left: G-valued")->check(CLI::IsMember({"right", "left"}));
  pr->callback([&] { action = [&] { return do_pairing(run, file, side); }; });

  auto* lk = app.add_subcommand("linking", "Linking category or linking groupoid");
  lk->add_option("--bibundle", file)->required();
  auto* og = lk->add_flag("--groupoid", as_groupoid);
  auto* oc = lk->add_flag("--category", as_category);
  og->excludes(oc);
  lk->callback([&] { action = [&] { return do_linking(run, file, as_groupoid); }; });

  auto* mo = app.add_subcommand("morita", "Is the bibundle a weak isomorphism");
  mo->add_option("--bibundle", file)->required();
  mo->callback([&] { action = [&] { return do_morita(run, file); }; });

  auto* ev = app.add_subcommand("eval-diagram", "Evaluate a diagram expression");
  ev->add_option("--groupoid", groupoid);
  ev->add_option("--spec", spec, "Stacky spec; binds mu, e and inv");
  ev->add_option("--bind", binds, "NAME=bibundle.json");
  ev->add_option("expr", expr)->required();
  ev->add_option("--name", eval_name, "Output file name");
  ev->callback([&] {
    action = [&] { return do_eval(run, make_env(run, groupoid, spec, binds), expr, eval_name); };
  });

  auto* ck = app.add_subcommand("check", "Are two diagram expressions isomorphic");
  ck->add_option("--groupoid", groupoid);
  ck->add_option("--spec", spec, "Stacky spec; binds mu, e and inv");
  ck->add_option("--bind", binds, "NAME=bibundle.json");
  ck->add_option("--lhs", lhs)->required();
  ck->add_option("--rhs", rhs)->required();
  ck->callback([&] { action = [&] { return do_check(run, make_env(run, groupoid, spec, binds), lhs, rhs); }; });

  auto* bz = app.add_subcommand("bundlize", "Bundlization of a homomorphism");
  bz->add_option("--hom", file)->required();
  bz->callback([&] { action = [&] { return do_bundlize(run, file); }; });

  auto* cg = app.add_subcommand("check-group", "Stacky monoid and group axioms");
  cg->add_option("--spec", file)->required();
  cg->callback([&] { action = [&] { return do_check_group(run, file); }; });

  auto* pi = app.add_subcommand("preinverse", "Preinverse of a stacky monoid");
  pi->add_option("--spec", file)->required();
  pi->callback([&] { action = [&] { return do_preinverse(run, file); }; });

  auto* co = app.add_subcommand("coherence", "Dodecagon and unit pentagon loops");
  co->add_option("--spec", file)->required();
  co->callback([&] { action = [&] { return do_coherence(run, file); }; });

  auto* kn = app.add_subcommand("kan", "Kan condition on a simplicial set");
  kn->add_option("--sset", file)->required();
  kn->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  kn->add_option("--i", i)->required()->check(CLI::Range(0, 8));
  kn->add_flag("--strict", strict);
  kn->callback([&] { action = [&] { return do_kan(run, file, n, i, strict); }; });

  auto* gf = app.add_subcommand("gen-fixture", "Write fixture files");
  gf->add_option("family", gen.family,
                 "trivial|pair|cyclic|action|kronecker_finite|random-groupoid|"
                 "random-right-principal-bibundle|nerve")
      ->required();
  gf->add_option("--n", gen.n);
  gf->add_option("--m", gen.m, "points acted on (action)");
  gf->add_option("--N", gen.N);
  gf->add_option("--q", gen.q);
  gf->add_option("--k", gen.k, "truncation level (nerve)");
  gf->add_option("--of", gen.of, "poset|free-monoid|groupoid file (nerve)");
  gf->callback([&] { action = [&] { return do_gen(run, gen); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  for (const auto* sub : app.get_subcommands()) run.command = sub->get_name();

  int code = 2;
  try {
    code = action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    run.report["error"] = e.what();
    if (run.json) {
      std::cout << Json{{"command", run.command}, {"exit", 2}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }

  Json manifest;
  manifest["command"] = run.command;
  Json inputs = Json::array();
  for (const auto& [path, digest] : run.loader.inputs()) inputs.push_back({{"path", path}, {"sha256", digest}});
  manifest["inputs"] = inputs;
  manifest["seed"] = run.seed;
  manifest["exit"] = code;
  manifest["witnesses"] = run.witnesses;
  Json out = {{"command", run.command}, {"exit", code}, {"report", run.report}, {"manifest", manifest}};
  if (run.out != ".") write_json(fs::path(run.out) / "manifest.json", manifest);
  if (run.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& w : run.witnesses) std::cout << "witness: " << w << "\n";
  }
  return code;
}
