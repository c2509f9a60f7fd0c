#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bibucalc/groupoid.hpp"

namespace bibu {

/// Simplicial set stored on levels 0..k.
/// face[n][i] : X_n -> X_{n-1} for 1 <= n <= k, 0 <= i <= n;
/// degen[n][i] : X_n -> X_{n+1} for 0 <= n < k, 0 <= i <= n.
struct TruncatedSSet {
  std::vector<FinSet> levels;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;

  int top() const { return static_cast<int>(levels.size()) - 1; }
  std::size_t count(int n) const { return levels[static_cast<std::size_t>(n)].size(); }
  int d(int n, int i, int x) const {
    return face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  int s(int n, int i, int x) const {
    return degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
};

/// Shape of the tables plus the simplicial identities on every stored level.
ValidationReport validate_sset(const TruncatedSSet& X);

/// X_n = chains (f1, ..., fn) with r(f_j) = l(f_{j+1}), labelled "f1|f2|...".
/// Vertex 0 is l(f1), vertex j is r(f_j); d_i drops vertex i (composing at
/// inner vertices), s_i repeats it.
TruncatedSSet nerve(const FinCategory& C, int k = 3);

/// A horn of shape (n, i): faces y_j in X_{n-1} for j != i, in increasing j.
using Horn = std::vector<int>;

/// Every compatible face tuple: d_a(y_b) = d_{b-1}(y_a) for a < b.
std::vector<Horn> horn_set(const TruncatedSSet& X, int n, int i);

struct KanResult {
  bool holds = true;
  // first horn with no filler, or (strict only) with several
  std::optional<Horn> witness;
  std::size_t fillers = 0;  // number of fillers of the witness horn
  std::size_t horns = 0;
};

/// Restriction X_n -> horn_set(n, i): weak asks surjective, strict bijective.
KanResult kan_check(const TruncatedSSet& X, int n, int i, bool strict);

/// Evidence up to the stored level only.
struct Classification {
  int levels = 0;
  bool category = false;       // strict inner Kan, 2 <= n <= k
  bool groupoid = false;       // strict Kan for all i, 2 <= n <= k
  bool single_vertex = false;
  bool group_candidate() const { return groupoid && single_vertex; }
};

Classification classify(const TruncatedSSet& X);

/// Labels of a horn's faces, for witnesses.
std::vector<std::string> horn_labels(const TruncatedSSet& X, int n, const Horn& h);

/// The poset 0 -> 1: objects "0", "1", arrows "id0", "a", "id1".
FinCategory poset_arrow();
/// Monoid {1, a, a2, a3} on one object with a^i a^j = a^min(i+j, 3).
FinCategory truncated_free_monoid();

}  // namespace bibu
