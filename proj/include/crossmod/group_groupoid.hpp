#ifndef CROSSMOD_GROUP_GROUPOID_HPP
#define CROSSMOD_GROUP_GROUPOID_HPP

#include <memory>
#include <vector>

#include "crossmod/crossed_module.hpp"
#include "crossmod/groupoid.hpp"

namespace crossmod {

/// A group object in groupoids: group structures on objects and arrows for
/// which src, tgt and the identity-assignment are homomorphisms; the
/// interchange law (a o g)(b o h) = (ab) o (gh) then ties multiplication to
/// composition.  The object set must be nonempty (it carries e).
struct GroupGroupoid {
  GroupoidPtr groupoid;
  GroupPtr object_group;  // element i = object i
  GroupPtr arrow_group;   // element i = arrow i

  int e() const { return object_group->identity(); }
  int one_e() const { return arrow_group->identity(); }
  /// arrow-group product
  int mul(int g, int h) const { return arrow_group->mul(g, h); }
  /// arrow-group inverse (written bar-g)
  int ginv(int g) const { return arrow_group->inv(g); }
};

using GGPtr = std::shared_ptr<const GroupGroupoid>;

CheckReport validate_group_groupoid(const GroupGroupoid& g);
GGPtr make_group_groupoid(GroupoidPtr gpd, GroupPtr object_group, GroupPtr arrow_group);
/// One-object group-groupoid on an abelian group (objects trivial).
GGPtr one_object_group_groupoid(const GroupPtr& abelian);

/// Consequences of the interchange law, re-checked exhaustively:
///   a o b = a (bar-1_{ta}) b on all composable pairs,
///   a o (1_{ta} g) o a^{-1} = 1_{sa} g      for g in G(e),
///   a g bar-a = 1_{sa} g bar-1_{sa}         for g in G(e),
/// and G(e) is abelian.
CheckReport composition_identities(const GroupGroupoid& g);

/// The wide normal subgroupoid N(x) = 1_x N(e) generated by a subgroup
/// N(e) <= G(e); each N(x) is verified to be a conjugation-stable subgroup.
struct NormalSubgroupoid {
  GroupoidPtr groupoid;
  std::vector<int> arrow_map;  // into the ambient groupoid
};
NormalSubgroupoid normal_subgroupoid_from_subgroup(const GGPtr& g,
                                                   const std::vector<int>& n_of_e_arrows);

/// A morphism of group-groupoids: a groupoid morphism whose object and arrow
/// maps are group homomorphisms.
struct GroupGroupoidMorphism {
  GGPtr source, target;
  GroupoidMorphism underlying;
};
CheckReport validate_gg_morphism(const GroupGroupoidMorphism& m);
GroupGroupoidMorphism make_gg_morphism(GGPtr src, GGPtr tgt, std::vector<int> object_map,
                                       std::vector<int> arrow_map);

/// delta : group-groupoids -> crossed modules.  M is the costar at e with
/// the arrow-group structure, mu the restriction of the source map, and P
/// acts by m^p = bar-1_p m 1_p.
struct DeltaResult {
  XmPtr xm;
  std::vector<int> costar_arrows;  // M element -> arrow id
};
DeltaResult delta(const GGPtr& g);

/// beta : crossed modules -> group-groupoids.  Objects P, arrows the
/// semidirect product P x| M with (p,m)(q,n) = (pq, m^q n), s(p,m) = p,
/// t(p,m) = p mu(m), (p,m) o (q,n) = (p, mn) when p mu(m) = q.
/// Arrow ids are p * |M| + m.
struct BetaResult {
  GGPtr gg;
  int arrow_of(int p, int m) const;
  int p_of(int arrow) const;
  int m_of(int arrow) const;
  int m_order = 0;
};
BetaResult beta(const CrossedModule& x);

CrossedModuleMorphism delta_morphism(const GroupGroupoidMorphism& f);
GroupGroupoidMorphism beta_morphism(const CrossedModuleMorphism& f);

/// pi0 of a group-groupoid as a group (components multiply through object
/// representatives), with the canonical isomorphism onto Coker mu verified,
/// plus the object group at e, verified equal to Ker mu.
struct Pi0Result {
  GroupPtr pi0;
  GroupPtr object_group_at_e;
  std::vector<int> component_of_object;
  /// verified isomorphism pi0 -> Q of delta(g)
  std::vector<int> iso_to_coker;
};
Pi0Result pi0_and_object_group(const GGPtr& g);

/// The verified natural isomorphism delta(beta(x)) -> x: ((p,m) |-> m^{-1}, id_P).
CrossedModuleMorphism delta_beta_iso(const XmPtr& x);
/// The verified natural isomorphism beta(delta(g)) -> g: (p,m) |-> 1_p m^{-1}.
GroupGroupoidMorphism beta_delta_iso(const GGPtr& g);

/// An action of a group-groupoid on a group A via a homomorphism
/// w : A -> O_G, whose underlying set action satisfies the interchange law
/// (a o g)(b o h) = (ab) o (gh) whenever both sides are defined.
struct GroupGroupoidActionOnGroup {
  GGPtr base;
  GroupPtr carrier;
  GroupMorphism anchor;  // A -> object group
  GroupoidActionOnSet underlying;
};
CheckReport validate_gg_action(const GroupGroupoidActionOnGroup& a);
/// Throws InterchangeViolated with a witness when the interchange fails.
GroupGroupoidActionOnGroup make_gg_action(GGPtr base, GroupPtr carrier, GroupMorphism anchor,
                                          std::vector<int> act);

/// The action groupoid A x| G with arrow group (a,g)(c,k) = (ac, gk); the
/// projection is a covering morphism of group-groupoids.
struct GroupActionGroupoid {
  GGPtr gg;
  GroupGroupoidMorphism projection;
  std::vector<std::pair<int, int>> pairs;
};
GroupActionGroupoid group_action_groupoid(const GroupGroupoidActionOnGroup& act);

}  // namespace crossmod

#endif
