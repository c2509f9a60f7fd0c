#include "bibucalc/simplicial.hpp"

#include <algorithm>
#include <map>

namespace bibu {

namespace {

std::size_t U(int x) { return static_cast<std::size_t>(x); }

}  // namespace

ValidationReport validate_sset(const TruncatedSSet& X) {
  ValidationReport rep;
  const int k = X.top();
  if (k < 0) throw StructuralError("simplicial set has no levels");
  if (X.face.size() != U(k + 1) || X.degen.size() != U(k + 1))
    throw StructuralError("simplicial set: face/degeneracy tables do not match the levels");
  for (int n = 0; n <= k; ++n) {
    std::size_t nf = n == 0 ? 0 : U(n + 1), nd = n == k ? 0 : U(n + 1);
    if (X.face[U(n)].size() != nf || X.degen[U(n)].size() != nd)
      throw StructuralError("simplicial set: wrong number of maps at level " + std::to_string(n));
    for (const auto& f : X.face[U(n)])
      if (f.size() != X.count(n) ||
          std::any_of(f.begin(), f.end(), [&](int y) { return y < 0 || U(y) >= X.count(n - 1); }))
        throw StructuralError("simplicial set: bad face table at level " + std::to_string(n));
    for (const auto& s : X.degen[U(n)])
      if (s.size() != X.count(n) ||
          std::any_of(s.begin(), s.end(), [&](int y) { return y < 0 || U(y) >= X.count(n + 1); }))
        throw StructuralError("simplicial set: bad degeneracy table at level " + std::to_string(n));
  }
  auto lab = [&](int n, int x) { return X.levels[U(n)].label(x); };
  auto tag = [](const char* what, int i, int j) {
    return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  // d_i d_j = d_{j-1} d_i, i < j, on X_n with n >= 2
  for (int n = 2; n <= k; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < static_cast<int>(X.count(n)); ++x)
          if (X.d(n - 1, i, X.d(n, j, x)) != X.d(n - 1, j - 1, X.d(n, i, x)))
            rep.note(tag("face-face", i, j), {lab(n, x)});
  // identities mixing faces and degeneracies, on X_n with n + 1 <= k
  for (int n = 0; n < k; ++n)
    for (int j = 0; j <= n; ++j)
      for (int x = 0; x < static_cast<int>(X.count(n)); ++x) {
        int sx = X.s(n, j, x);
        for (int i = 0; i <= n + 1; ++i) {
          int lhs = X.d(n + 1, i, sx);
          if (i == j || i == j + 1) {
            if (lhs != x) rep.note(tag("face-degeneracy", i, j), {lab(n, x)});
          } else if (i < j) {
            if (lhs != X.s(n - 1, j - 1, X.d(n, i, x))) rep.note(tag("face-degeneracy", i, j), {lab(n, x)});
          } else if (lhs != X.s(n - 1, j, X.d(n, i - 1, x))) {
            rep.note(tag("face-degeneracy", i, j), {lab(n, x)});
          }
        }
      }
  // s_i s_j = s_{j+1} s_i, i <= j, X_n -> X_{n+2}
  for (int n = 0; n + 2 <= k; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < static_cast<int>(X.count(n)); ++x)
          if (X.s(n + 1, i, X.s(n, j, x)) != X.s(n + 1, j + 1, X.s(n, i, x)))
            rep.note(tag("degeneracy-degeneracy", i, j), {lab(n, x)});
  return rep;
}

TruncatedSSet nerve(const FinCategory& C, int k) {
  if (k < 1) throw StructuralError("nerve: truncation level must be at least 1");
  TruncatedSSet X;
  // chains[n] lists the arrows of each n-simplex; level 0 is the object itself
  std::vector<std::vector<std::vector<int>>> chains(U(k + 1));
  std::vector<std::map<std::vector<int>, int>> index(U(k + 1));
  for (int x = 0; x < static_cast<int>(C.num_objects()); ++x) chains[0].push_back({x});
  for (int g = 0; g < static_cast<int>(C.num_arrows()); ++g) chains[1].push_back({g});
  for (int n = 2; n <= k; ++n)
    for (const auto& c : chains[U(n - 1)])
      for (int g : C.with_left(C.r(c.back()))) {
        auto next = c;
        next.push_back(g);
        chains[U(n)].push_back(std::move(next));
      }
  for (int n = 0; n <= k; ++n) {
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < chains[U(n)].size(); ++t) {
      const auto& c = chains[U(n)][t];
      index[U(n)][c] = static_cast<int>(t);
      std::string s;
      for (std::size_t p = 0; p < c.size(); ++p) {
        if (p) s += "|";
        s += n == 0 ? C.objects().label(c[p]) : C.arrows().label(c[p]);
      }
      labels.push_back(s);
    }
    X.levels.emplace_back(std::move(labels));
  }
  auto vertex = [&](const std::vector<int>& c, int v) {
    return v == 0 ? C.l(c.front()) : C.r(c[U(v - 1)]);
  };
  X.face.resize(U(k + 1));
  X.degen.resize(U(k + 1));
  for (int n = 1; n <= k; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> table;
      for (const auto& c : chains[U(n)]) {
        std::vector<int> out;
        if (n == 1) {
          out = {vertex(c, 1 - i)};
        } else if (i == 0) {
          out.assign(c.begin() + 1, c.end());
        } else if (i == n) {
          out.assign(c.begin(), c.end() - 1);
        } else {
          out.assign(c.begin(), c.begin() + (i - 1));
          out.push_back(C.comp(c[U(i - 1)], c[U(i)]));
          out.insert(out.end(), c.begin() + (i + 1), c.end());
        }
        table.push_back(index[U(n - 1)].at(out));
      }
      X.face[U(n)].push_back(std::move(table));
    }
  for (int n = 0; n < k; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> table;
      for (const auto& c : chains[U(n)]) {
        std::vector<int> out;
        if (n == 0) {
          out = {C.unit(c[0])};
        } else {
          out = c;
          out.insert(out.begin() + i, C.unit(vertex(c, i)));
        }
        table.push_back(index[U(n + 1)].at(out));
      }
      X.degen[U(n)].push_back(std::move(table));
    }
  auto rep = validate_sset(X);
  if (!rep.ok()) throw StructuralError("nerve: simplicial identity " + rep.violations[0].axiom + " fails");
  return X;
}

std::vector<Horn> horn_set(const TruncatedSSet& X, int n, int i) {
  if (n < 1 || n > X.top() || i < 0 || i > n)
    throw StructuralError("horn_set: need 1 <= n <= " + std::to_string(X.top()) + " and 0 <= i <= n");
  std::vector<int> faces;
  for (int j = 0; j <= n; ++j)
    if (j != i) faces.push_back(j);
  std::vector<Horn> out;
  Horn cur;
  const int m = static_cast<int>(X.count(n - 1));
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == faces.size()) {
      out.push_back(cur);
      return;
    }
    const int b = faces[p];
    for (int y = 0; y < m; ++y) {
      bool ok = true;
      // for n == 1 the "faces" are vertices and nothing constrains them
      for (std::size_t q = 0; q < p && ok && n >= 2; ++q)
        ok = X.d(n - 1, faces[q], y) == X.d(n - 1, b - 1, cur[q]);
      if (!ok) continue;
      cur.push_back(y);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

KanResult kan_check(const TruncatedSSet& X, int n, int i, bool strict) {
  auto horns = horn_set(X, n, i);
  std::map<Horn, std::size_t> fill;
  for (const auto& h : horns) fill[h] = 0;
  for (int x = 0; x < static_cast<int>(X.count(n)); ++x) {
    Horn h;
    for (int j = 0; j <= n; ++j)
      if (j != i) h.push_back(X.d(n, j, x));
    ++fill.at(h);  // a restricted simplex is always a horn
  }
  KanResult res;
  res.horns = horns.size();
  for (const auto& h : horns) {
    std::size_t c = fill[h];
    if (c == 0 || (strict && c > 1)) {
      res.holds = false;
      res.witness = h;
      res.fillers = c;
      break;
    }
  }
  return res;
}

Classification classify(const TruncatedSSet& X) {
  Classification c;
  c.levels = X.top();
  c.category = c.groupoid = X.top() >= 2;
  for (int n = 2; n <= X.top(); ++n)
    for (int i = 0; i <= n; ++i) {
      bool ok = kan_check(X, n, i, true).holds;
      if (!ok) c.groupoid = false;
      if (!ok && i > 0 && i < n) c.category = false;
    }
  c.single_vertex = X.count(0) == 1;
  return c;
}

std::vector<std::string> horn_labels(const TruncatedSSet& X, int n, const Horn& h) {
  std::vector<std::string> out;
  for (int y : h) out.push_back(X.levels[U(n - 1)].label(y));
  return out;
}

FinCategory poset_arrow() {
  // arrow a: l(a) = 1 (target), r(a) = 0 (source)
  std::vector<std::array<int, 3>> t = {{0, 0, 0}, {1, 0, 1}, {2, 1, 1}, {2, 2, 2}};
  return FinCategory::from_triples(FinSet({"0", "1"}), FinSet({"id0", "a", "id1"}), {0, 1, 1},
                                   {0, 0, 1}, {0, 2}, t);
}

FinCategory truncated_free_monoid() {
  return FinCategory(FinSet({"*"}), FinSet({"1", "a", "a2", "a3"}), {0, 0, 0, 0}, {0, 0, 0, 0}, {0},
                     [](int i, int j) { return std::min(i + j, 3); });
}

}  // namespace bibu
