#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bibucalc/fixtures.hpp"
#include "bibucalc/group.hpp"
#include "bibucalc/io.hpp"

using namespace bibu;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("bibucalc_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(sha256_bytes("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_bytes("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("groupoid round trip") {
  auto dir = scratch("groupoid");
  for (const auto& [name, G] : standard_groupoids()) {
    INFO(name);
    write_json(dir / "g.json", groupoid_to_json(*G));
    Loader L;
    auto back = L.groupoid("g.json", dir);
    CHECK(*back == *G);
    REQUIRE(L.inputs().size() == 1);
    CHECK(L.inputs()[0].second == sha256_file(dir / "g.json"));
  }
}

TEST_CASE("inverse table is derived when absent") {
  auto j = groupoid_to_json(*symmetric3());
  j.erase("inv");
  Loader L;
  CHECK(*L.groupoid(j) == *symmetric3());
}

TEST_CASE("malformed groupoids are structural errors") {
  Loader L;
  auto j = groupoid_to_json(*pair(2));
  j["inv"]["(0,1)"] = "(0,1)";
  CHECK_THROWS_AS(L.groupoid(j), StructuralError);
  auto k = groupoid_to_json(*cyclic(3));
  k.erase("comp");
  CHECK_THROWS_AS(L.groupoid(k), StructuralError);
  auto u = groupoid_to_json(*cyclic(3));
  u["l"]["1"] = "nowhere";
  CHECK_THROWS_AS(L.groupoid(u), StructuralError);
  CHECK_THROWS_AS(L.groupoid("does_not_exist.json", scratch("missing")), StructuralError);
}

TEST_CASE("bibundle, hom and sset round trips") {
  auto dir = scratch("bibundle");
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    auto G = random_groupoid(rng, 8), H = random_groupoid(rng, 8);
    auto M = random_bibundle(rng, G, H, 12);
    write_json(dir / "m.json", bibundle_to_json(M));
    Loader L;
    CHECK(L.bibundle("m.json", dir) == M);
    auto phi = random_hom(rng, G, H);
    write_json(dir / "phi.json", hom_to_json(phi));
    auto back = L.hom("phi.json", dir);
    CHECK(*back.source == *G);
    CHECK(back.f0 == phi.f0);
    CHECK(back.f1 == phi.f1);
  }
  auto X = nerve(*pair(2), 3);
  write_json(dir / "x.json", sset_to_json(X));
  Loader L;
  auto Y = L.sset("x.json", dir);
  CHECK(Y.levels == X.levels);
  CHECK(Y.face == X.face);
  CHECK(Y.degen == X.degen);
}

TEST_CASE("stacky group from files with power refs") {
  auto dir = scratch("stacky");
  auto D = kronecker_finite(4, 2);
  write_json(dir / "g.json", groupoid_to_json(*D.base));
  Json pow2 = {{"power", {{"base", "g.json"}, {"n", 2}}}};
  Json pow0 = {{"power", {{"base", "g.json"}, {"n", 0}}}};
  write_json(dir / "mu.json", bibundle_to_json(D.mu, pow2, "g.json"));
  write_json(dir / "e.json", bibundle_to_json(D.e, pow0, "g.json"));
  write_json(dir / "i.json", bibundle_to_json(*D.i, "g.json", "g.json"));
  write_json(dir / "spec.json", Json{{"groupoid", "g.json"}, {"mu", "mu.json"}, {"e", "e.json"}, {"i", "i.json"}});
  Loader L;
  auto E = L.stacky("spec.json", dir);
  CHECK(E.mu.size() == D.mu.size());
  CHECK(check_monoid(E).ok());
  CHECK(check_group(E).group);
  CHECK(L.inputs().size() == 5);
}

TEST_CASE("fixture directory from the environment") {
  auto fix = scratch("fixtures");
  auto elsewhere = scratch("elsewhere");
  write_json(fix / "c3.json", groupoid_to_json(*cyclic(3)));
  ::setenv("BIBUCALC_FIXTURES", fix.c_str(), 1);
  Loader L;
  CHECK(*L.groupoid("c3.json", elsewhere) == *cyclic(3));
  ::unsetenv("BIBUCALC_FIXTURES");
  Loader L2;
  CHECK_THROWS_AS(L2.groupoid("c3.json", elsewhere), StructuralError);
}

TEST_CASE("writing is deterministic") {
  auto dir = scratch("determinism");
  auto M = diagonal(cyclic_action(3, 4));
  write_json(dir / "a.json", bibundle_to_json(M));
  write_json(dir / "b.json", bibundle_to_json(M));
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(slurp(dir / "a.json").back() == '\n');
}

TEST_CASE("report formats") {
  auto P = compute_pairing(identity_bibundle(cyclic(2)));
  auto j = pairing_to_json(identity_bibundle(cyclic(2)), *P.pairing);
  CHECK(j["entries"].size() == 4);
  auto pj = principality_to_json(check_principal(cv(cyclic(2)), Side::Right));
  CHECK(pj["P2"] == false);
  CHECK(pj["principal"] == false);
  auto W = identity_witness(identity_bibundle(cyclic(2)));
  auto wj = witness_to_json(W, identity_bibundle(cyclic(2)), identity_bibundle(cyclic(2)));
  CHECK(wj["forward"]["1"] == "1");
}
