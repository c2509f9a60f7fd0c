#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bibucalc/groupoid.hpp"

namespace bibu {

/// A G-H bibundle: carrier M with moments l: M -> G_0, r: M -> H_0, a left
/// G-action g.m (defined iff r(g) == l(m)) and a right H-action m.h
/// (defined iff l(h) == r(m)).
///
/// Both action tables are total on their domains; construction rejects a
/// missing or out-of-range entry as a StructuralError. The action axioms
/// themselves are only checked by validate_bibundle.
class Bibundle {
 public:
  using LeftFn = std::function<int(int g, int m)>;
  using RightFn = std::function<int(int m, int h)>;

  Bibundle() = default;
  Bibundle(GroupoidPtr left, GroupoidPtr right, FinSet carrier, std::vector<int> lm,
           std::vector<int> rm, const LeftFn& act_left, const RightFn& act_right);

  /// Triples (g, m, g.m) and (m, h, m.h). Each defined pair exactly once.
  static Bibundle from_triples(GroupoidPtr left, GroupoidPtr right, FinSet carrier,
                               std::vector<int> lm, std::vector<int> rm,
                               std::span<const std::array<int, 3>> left_triples,
                               std::span<const std::array<int, 3>> right_triples);

  const GroupoidPtr& left() const { return G_; }
  const GroupoidPtr& right() const { return H_; }
  const FinGroupoid& G() const { return *G_; }
  const FinGroupoid& H() const { return *H_; }
  const FinSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  const std::string& label(int m) const { return carrier_.label(m); }

  int lm(int m) const { return lm_[static_cast<std::size_t>(m)]; }
  int rm(int m) const { return rm_[static_cast<std::size_t>(m)]; }
  const std::vector<int>& lm_table() const { return lm_; }
  const std::vector<int>& rm_table() const { return rm_; }

  bool left_defined(int g, int m) const { return G_->r(g) == lm(m); }
  bool right_defined(int m, int h) const { return H_->l(h) == rm(m); }
  /// Throws StructuralError outside the domain.
  int act_left(int g, int m) const;
  int act_right(int m, int h) const;

  /// Carrier points over a base object.
  std::span<const int> fiber_l(int x) const { return fib_l_[static_cast<std::size_t>(x)]; }
  std::span<const int> fiber_r(int y) const { return fib_r_[static_cast<std::size_t>(y)]; }
  int pos_in_fiber_l(int m) const { return pos_l_[static_cast<std::size_t>(m)]; }

  std::vector<std::array<int, 3>> left_triples() const;
  std::vector<std::array<int, 3>> right_triples() const;

  /// Overwrites one action entry. Only meant for building negative fixtures.
  void set_left(int g, int m, int value);
  void set_right(int m, int h, int value);

  /// Free-form record of how the bibundle was produced; empty for inputs.
  std::string provenance;

  /// Literal equality: same groupoids, labels and tables.
  bool operator==(const Bibundle& o) const;

 private:
  void index();
  std::size_t lslot(int g, int m) const {
    return loff_[static_cast<std::size_t>(m)] + static_cast<std::size_t>(G_->pos_in_right(g));
  }
  std::size_t rslot(int m, int h) const {
    return roff_[static_cast<std::size_t>(m)] + static_cast<std::size_t>(H_->pos_in_left(h));
  }

  GroupoidPtr G_, H_;
  FinSet carrier_;
  std::vector<int> lm_, rm_;
  std::vector<std::size_t> loff_, roff_;
  std::vector<int> lact_, ract_;
  std::vector<std::vector<int>> fib_l_, fib_r_;
  std::vector<int> pos_l_;
};

ValidationReport validate_bibundle(const Bibundle& M);

enum class Side { Left, Right };

/// P1: moment onto the far base is surjective; P2: the action on this side
/// is free; P3: it is transitive on the fibers of the opposite moment.
/// For Side::Right that is l surjective, right action free, transitive on
/// l-fibers. An empty fiber counts as transitive.
struct PrincipalityReport {
  bool p1 = true, p2 = true, p3 = true;
  std::vector<std::string> w1, w2, w3;
  bool empty_fiber = false;
  bool all() const { return p1 && p2 && p3; }
};

PrincipalityReport check_principal(const Bibundle& M, Side side);
bool is_biprincipal(const Bibundle& M);

/// Dense pairing table, entry (m, m') at m * |M| + m', -1 where undefined.
struct Pairing {
  std::size_t n = 0;
  std::vector<int> table;
  int at(int m, int m2) const { return table[static_cast<std::size_t>(m) * n + static_cast<std::size_t>(m2)]; }
  int& at(int m, int m2) { return table[static_cast<std::size_t>(m) * n + static_cast<std::size_t>(m2)]; }
  bool operator==(const Pairing&) const = default;
};

struct PairingResult {
  std::optional<Pairing> pairing;
  // on failure: "free" with (m, h) or "transitive" with (m, m')
  std::string reason;
  std::vector<std::string> witness;
};

/// The H-valued pairing with m . <m, m'> = m'.
PairingResult compute_pairing(const Bibundle& M);
/// The G-valued pairing with <m, m'> . m' = m, defined when r(m) = r(m').
PairingResult compute_left_pairing(const Bibundle& M);

/// Checks H1 to H4 pointwise. Entries outside {l(m) = l(m')} are ignored.
ValidationReport check_pairing_axioms(const Bibundle& M, const Pairing& P);

}  // namespace bibu
