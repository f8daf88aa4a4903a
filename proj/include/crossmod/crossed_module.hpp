#ifndef CROSSMOD_CROSSED_MODULE_HPP
#define CROSSMOD_CROSSED_MODULE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "crossmod/abelian.hpp"
#include "crossmod/finite_group.hpp"

namespace crossmod {

/// A crossed module mu : M -> P with a right P-action on M satisfying
///   CM1: mu(m^p) = p^{-1} (mu m) p
///   CM2: n^{mu m} = m^{-1} n m
/// Construction validates both axioms plus the standard consequences
/// (mu M normal in P, Ker mu central in M and fixed by mu M) and eagerly
/// derives the kernel subgroup A and the cokernel Q with its projection.
class CrossedModule {
 public:
  CrossedModule(GroupPtr m, GroupPtr p, GroupMorphism mu, RightGroupAction action);

  static CheckReport validate(const GroupPtr& m, const GroupPtr& p, const GroupMorphism& mu,
                              const RightGroupAction& action);

  const GroupPtr& M() const { return m_; }
  const GroupPtr& P() const { return p_; }
  const GroupMorphism& mu() const { return mu_; }
  const RightGroupAction& action() const { return action_; }
  int act(int m, int p) const { return action_(m, p); }

  /// Kernel of mu as sorted M-indices.
  const std::vector<int>& kernel_elements() const { return kernel_; }
  /// Ker mu as a group, with its embedding into M.
  const Subgroup& A() const { return a_; }
  /// Coker mu with the quotient projection q : P -> Q.
  const GroupPtr& Q() const { return q_.group; }
  const GroupMorphism& q() const { return q_.projection; }
  const QuotientGroup& cokernel() const { return q_; }

 private:
  GroupPtr m_, p_;
  GroupMorphism mu_;
  RightGroupAction action_;
  std::vector<int> kernel_;
  Subgroup a_;
  QuotientGroup q_;
};

using XmPtr = std::shared_ptr<const CrossedModule>;
XmPtr make_crossed_module(GroupPtr m, GroupPtr p, GroupMorphism mu, RightGroupAction action);

/// Morphism (f1, f2) : (N -> Q) -> (M -> P) of crossed modules: the square
/// commutes and f1 is an operator homomorphism over f2.
struct CrossedModuleMorphism {
  XmPtr source, target;
  GroupMorphism f1;  // on the top groups
  GroupMorphism f2;  // on the bottom groups
};
CheckReport validate_crossed_morphism(const CrossedModuleMorphism& m);
CrossedModuleMorphism make_crossed_morphism(XmPtr src, XmPtr tgt, GroupMorphism f1,
                                            GroupMorphism f2);
CrossedModuleMorphism identity_crossed_morphism(XmPtr x);

/// Prop-style covering tests: a morphism of crossed modules is a covering
/// when f1 is an isomorphism; universal when additionally nu (the source
/// structure morphism) is injective and the induced map Coker nu -> Coker mu
/// is an isomorphism.
bool is_crossed_covering(const CrossedModuleMorphism& m);
bool is_universal_crossed_covering(const CrossedModuleMorphism& m);

// Standard constructors.
/// (i) inclusion of a normal subgroup with the conjugation action.
XmPtr crossed_module_from_normal_inclusion(GroupPtr p, const std::vector<int>& normal_subset);
/// (ii) zero morphism from an abelian P-module.
XmPtr crossed_module_from_module(GroupPtr p, GroupPtr m, RightGroupAction action);
/// (iii) inner automorphisms chi_M : M -> Aut(M).
XmPtr crossed_module_inner(GroupPtr m, int aut_bound = 12);
/// (iv) a surjection with central kernel, acting by lifted conjugation.
XmPtr crossed_module_from_central_surjection(const GroupMorphism& mu);

/// Ker mu as a module over Q = Coker mu (the action of P on Ker mu factors
/// through Q; representative independence is re-verified).
struct KernelModule {
  GroupPtr A;                    // the kernel as a group
  GroupMorphism include_in_M;    // A -> M
  AbelianStructure structure;    // coordinates for A
  /// per Q element, the action as a map A-index -> A-index
  std::vector<std::vector<int>> q_action;
};
KernelModule kernel_as_q_module(const CrossedModule& x);

}  // namespace crossmod

#endif
