#ifndef CROSSMOD_FINITE_GROUP_HPP
#define CROSSMOD_FINITE_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crossmod/errors.hpp"

namespace crossmod {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its full multiplication table.  Elements are the
/// contiguous indices 0..order-1; the identity index and inverse table are
/// derived from the table at construction.  Instances are immutable.
class FiniteGroup {
 public:
  /// Validates the table (closure, identity, associativity, inverses) and
  /// throws ValidationFailed with the first witness on failure.
  FiniteGroup(std::vector<std::vector<int>> table, std::string label);

  /// Report-style check of the group axioms on a raw table.  Returns the
  /// first failing axiom instance instead of throwing.
  static CheckReport validate_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  const std::string& label() const { return label_; }

  /// a^n for any integer n (n may be negative).
  int power(int a, long long n) const;
  /// Right conjugate p^{-1} a p.
  int conj(int a, int p) const { return mul(mul(inv(p), a), p); }
  int element_order(int a) const;
  bool is_abelian() const;

  /// Row-major copy of the multiplication table.
  std::vector<std::vector<int>> table() const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::string label_;
};

GroupPtr make_group(std::vector<std::vector<int>> table, std::string label);

// Standard small groups, identity at index 0.
GroupPtr trivial_group();
GroupPtr cyclic(int n);
GroupPtr klein_four();
/// Symmetric group on {0,1,2}; elements are one-line permutations in
/// lexicographic order, composed left-to-right.
GroupPtr symmetric3();
/// Dihedral group of order 2n: indices 0..n-1 rotations, n..2n-1 reflections.
GroupPtr dihedral(int n);
GroupPtr quaternion8();

/// A verified group homomorphism.  `map` is total on source indices.
struct GroupMorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  /// Sorted element indices of the kernel.
  std::vector<int> kernel() const;
  /// Sorted element indices of the image.
  std::vector<int> image() const;
};

/// Verifies the homomorphism property on all pairs; throws NotAHomomorphism
/// with a witness pair otherwise.
GroupMorphism make_morphism(GroupPtr src, GroupPtr tgt, std::vector<int> map);
GroupMorphism identity_morphism(GroupPtr g);
/// Diagrammatic composite x |-> g(f(x)).
GroupMorphism compose(const GroupMorphism& f, const GroupMorphism& g);
GroupMorphism zero_morphism(GroupPtr src, GroupPtr tgt);

/// A right action of `group` on `carrier` by group automorphisms:
/// m^1 = m, (m^p)^q = m^{pq}, (mn)^p = m^p n^p.
struct RightGroupAction {
  GroupPtr group;    // the actor
  GroupPtr carrier;  // the acted-on group
  std::vector<int> act;  // act[m * |group| + p]

  int operator()(int m, int p) const {
    return act[static_cast<size_t>(m) * group->order() + p];
  }
};

RightGroupAction make_right_action(GroupPtr actor, GroupPtr carrier,
                                   std::vector<int> table);
CheckReport validate_right_action(const GroupPtr& actor, const GroupPtr& carrier,
                                  const std::vector<int>& table);
RightGroupAction trivial_action(GroupPtr actor, GroupPtr carrier);
/// g acting on itself by right conjugation m^p = p^{-1} m p.
RightGroupAction conjugation_action(GroupPtr g);

/// Smallest subgroup containing `gens`, as sorted element indices.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& subset);

struct QuotientGroup {
  GroupPtr group;
  GroupMorphism projection;
  /// Canonical representative (smallest member) of each coset, indexed by
  /// quotient element.
  std::vector<int> representatives;
};
/// Coset multiplication group; cosets are ordered by their smallest member,
/// except that the coset of the identity comes out as the quotient identity.
/// Throws NotASubgroup / NotNormal.
QuotientGroup quotient_group(GroupPtr g, const std::vector<int>& normal_subset);

struct Subgroup {
  GroupPtr group;
  GroupMorphism embedding;
  /// element index in the subgroup group -> index in the ambient group
  std::vector<int> elements;
  /// ambient index -> subgroup index, or -1
  std::vector<int> index_of;
};
Subgroup subgroup_as_group(GroupPtr g, const std::vector<int>& subset);

struct DirectProduct {
  GroupPtr group;  // index = a * |B| + b
  GroupPtr left, right;
  int pair(int a, int b) const { return a * right->order() + b; }
  int first(int x) const { return x / right->order(); }
  int second(int x) const { return x % right->order(); }
};
DirectProduct direct_product(GroupPtr a, GroupPtr b);

/// A short generating sequence found greedily (empty for the trivial group).
std::vector<int> generating_sequence(const FiniteGroup& g);

/// All homomorphisms src -> tgt as full maps, lexicographically ordered by
/// generator images.  Throws BoundExceeded if the search space exceeds
/// `limit` candidate tuples.
std::vector<std::vector<int>> all_homomorphisms(const GroupPtr& src, const GroupPtr& tgt,
                                                long long limit = 4000000);

/// An isomorphism src -> tgt if one exists.
std::optional<std::vector<int>> find_isomorphism(const GroupPtr& src, const GroupPtr& tgt);

struct AutomorphismGroup {
  GroupPtr group;  // composition table of the automorphisms, left-to-right
  std::vector<std::vector<int>> maps;  // element index -> full automorphism map
};
/// Aut(g) by exhaustive search over index maps pruned by element order.
/// Throws BoundExceeded when g.order() exceeds `bound`.
AutomorphismGroup automorphism_group(const GroupPtr& g, int bound = 12);

/// All subgroups of g, each as a sorted index vector, deterministic order.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

}  // namespace crossmod

#endif
