#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bibucalc/finset.hpp"
#include "bibucalc/report.hpp"

namespace bibu {

// Composition convention used everywhere: comp(g, h) is defined iff
// r(g) == l(h), and then l(gh) = l(g), r(gh) = r(h). So l is the target and
// r the source, and gh means "first h, then g".

/// Finite category stored as explicit tables.
///
/// Arrows are addressed by index. For every object x the arrows with l == x
/// (resp. r == x) are kept as an ordered list, and every arrow knows its
/// position in both lists; composition, actions and pairings are all stored
/// densely against those positions.
class FinCategory {
 public:
  using CompFn = std::function<int(int, int)>;

  FinCategory() = default;

  /// Builds from a composition callable invoked on every composable pair.
  /// A negative or out-of-range result is a structural error.
  FinCategory(FinSet objects, FinSet arrows, std::vector<int> l, std::vector<int> r,
              std::vector<int> unit, const CompFn& comp);

  /// Builds from explicit triples (g, h, gh). Every composable pair must
  /// appear exactly once and no other pair may appear.
  static FinCategory from_triples(FinSet objects, FinSet arrows, std::vector<int> l,
                                  std::vector<int> r, std::vector<int> unit,
                                  std::span<const std::array<int, 3>> triples);

  const FinSet& objects() const { return objects_; }
  const FinSet& arrows() const { return arrows_; }
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  int l(int g) const { return l_[static_cast<std::size_t>(g)]; }
  int r(int g) const { return r_[static_cast<std::size_t>(g)]; }
  int unit(int x) const { return unit_[static_cast<std::size_t>(x)]; }
  bool composable(int g, int h) const { return r(g) == l(h); }
  /// Throws StructuralError when r(g) != l(h).
  int comp(int g, int h) const;

  std::span<const int> with_left(int x) const { return by_left_[static_cast<std::size_t>(x)]; }
  std::span<const int> with_right(int x) const { return by_right_[static_cast<std::size_t>(x)]; }
  int pos_in_left(int g) const { return pos_left_[static_cast<std::size_t>(g)]; }
  int pos_in_right(int g) const { return pos_right_[static_cast<std::size_t>(g)]; }

  const std::vector<int>& l_table() const { return l_; }
  const std::vector<int>& r_table() const { return r_; }
  const std::vector<int>& unit_table() const { return unit_; }

  /// All composable pairs as (g, h, gh), ordered by (g, h).
  std::vector<std::array<int, 3>> triples() const;

  std::uint64_t content_hash() const { return hash_; }

  bool operator==(const FinCategory& other) const;

  ValidationReport validate() const;

 protected:
  void index_moments();
  void rehash(std::uint64_t extra);

  FinSet objects_;
  FinSet arrows_;
  std::vector<int> l_, r_, unit_;
  std::vector<std::vector<int>> by_left_, by_right_;
  std::vector<int> pos_left_, pos_right_;
  // comp(g, h) lives at comp_[comp_offset_[g] + pos_in_left(h)].
  std::vector<std::size_t> comp_offset_;
  std::vector<int> comp_;
  std::uint64_t hash_ = 0;
};

/// Finite groupoid: a FinCategory plus an inverse table.
class FinGroupoid : public FinCategory {
 public:
  FinGroupoid() = default;
  FinGroupoid(FinCategory cat, std::vector<int> inv);

  int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& inv_table() const { return inv_; }

  bool operator==(const FinGroupoid& other) const {
    return FinCategory::operator==(other) && inv_ == other.inv_;
  }

 private:
  std::vector<int> inv_;
};

using GroupoidPtr = std::shared_ptr<const FinGroupoid>;

/// Literal equality (same labels, same tables), short-circuited on identity.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

ValidationReport validate_groupoid(const FinGroupoid& g);
ValidationReport validate_category(const FinCategory& c);

// ---------------------------------------------------------------------------
// Standard groupoids

/// The terminal groupoid: one object "*", one arrow "1". It is a strict unit
/// for product(): product(unit_groupoid(), G) returns G itself.
GroupoidPtr unit_groupoid();

/// Identities only, objects "0".."n-1".
GroupoidPtr trivial(int n);
/// All pairs (i,j), i,j < n, with (i,j)(j,k) = (i,k); l(i,j) = i.
GroupoidPtr pair(int n);
/// Cyclic group Z/n as a one-object groupoid, arrows "0".."n-1".
GroupoidPtr cyclic(int n);

/// One-object groupoid from a multiplication table over `labels`.
/// The table must define a group; the identity and inverses are read off it.
GroupoidPtr one_object(const std::vector<std::string>& labels,
                       const std::vector<std::vector<int>>& mult, std::string object = "*");

/// Action groupoid of a one-object groupoid acting on a finite set.
/// Arrows are (k, z) with l(k,z) = act(k,z), r(k,z) = z and
/// (k1,z1)(k2,z2) = (k1 k2, z2). Throws StructuralError with a witness when
/// `act` is not an action.
GroupoidPtr action_groupoid(const GroupoidPtr& group, const FinSet& carrier,
                            const std::function<int(int, int)>& act);

/// Cartesian product with componentwise structure. Objects and arrows are
/// indexed i * |H| + j and labelled "a,b". unit_groupoid() factors are
/// absorbed, so powers of a groupoid associate strictly.
GroupoidPtr product(const GroupoidPtr& g, const GroupoidPtr& h);
GroupoidPtr power(const GroupoidPtr& g, int n);

/// Same arrows, l and r swapped, comp_op(g, h) = comp(h, g).
GroupoidPtr opposite_groupoid(const GroupoidPtr& g);

/// Components side by side; labels of part k are prefixed "k:".
GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts);

/// Full subgroupoid on the given objects (in the given order).
GroupoidPtr full_subgroupoid(const GroupoidPtr& g, const std::vector<int>& objects);

// ---------------------------------------------------------------------------
// Homomorphisms

struct GroupoidHom {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<int> f0;  // objects
  std::vector<int> f1;  // arrows
};

ValidationReport check_hom(const GroupoidHom& phi);

GroupoidHom identity_hom(const GroupoidPtr& g);
/// phi first, then psi.
GroupoidHom compose_homs(const GroupoidHom& phi, const GroupoidHom& psi);
GroupoidHom diagonal_hom(const GroupoidPtr& g);
GroupoidHom terminal_hom(const GroupoidPtr& g);
/// (g, h) -> (h, g) from G x H to H x G.
GroupoidHom flip_hom(const GroupoidPtr& g, const GroupoidPtr& h);
GroupoidHom product_hom(const GroupoidHom& phi, const GroupoidHom& psi);
/// (phi, psi): K -> G x H.
GroupoidHom pairing_hom(const GroupoidHom& phi, const GroupoidHom& psi);

/// Label-forgetting isomorphism test between two groupoids (small sizes).
bool groupoids_isomorphic(const FinGroupoid& a, const FinGroupoid& b);

}  // namespace bibu
