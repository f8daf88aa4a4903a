#ifndef CROSSMOD_GROUPOID_HPP
#define CROSSMOD_GROUPOID_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crossmod/errors.hpp"
#include "crossmod/finite_group.hpp"

namespace crossmod {

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct Arrow {
  int src = 0;
  int tgt = 0;
  bool operator==(const Arrow&) const = default;
};

/// A finite groupoid: objects 0..n-1, arrows with source/target, a partial
/// composition table over exactly the composable pairs, identities and
/// inverses.  Composition is written left-to-right: g o h requires
/// tgt(g) == src(h).  Immutable after validated construction.
class FiniteGroupoid {
 public:
  /// `compose` is indexed [g * arrows + h], -1 where undefined; composability
  /// is recomputed from sources/targets and never trusted.
  FiniteGroupoid(int num_objects, std::vector<Arrow> arrows, std::vector<int> compose,
                 std::vector<int> identities, std::vector<int> inverses, std::string label);

  static CheckReport validate(int num_objects, const std::vector<Arrow>& arrows,
                              const std::vector<int>& compose, const std::vector<int>& identities,
                              const std::vector<int>& inverses);

  int num_objects() const { return num_objects_; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  int src(int g) const { return arrows_[g].src; }
  int tgt(int g) const { return arrows_[g].tgt; }
  bool composable(int g, int h) const { return tgt(g) == src(h); }
  /// g o h; UnknownObject-free: callers must ensure composability.
  int compose(int g, int h) const { return compose_[static_cast<size_t>(g) * num_arrows() + h]; }
  int identity(int x) const { return identities_[x]; }
  int inverse(int g) const { return inverses_[g]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& label() const { return label_; }

  bool is_loop(int g) const { return src(g) == tgt(g); }

 private:
  int num_objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> compose_;
  std::vector<int> identities_;
  std::vector<int> inverses_;
  std::string label_;
};

GroupoidPtr make_groupoid(int num_objects, std::vector<Arrow> arrows, std::vector<int> compose,
                          std::vector<int> identities, std::vector<int> inverses,
                          std::string label);

/// The one-object groupoid whose arrows are the elements of g.
GroupoidPtr one_object_groupoid(const GroupPtr& g);

/// Arrows out of x.
std::vector<int> star(const FiniteGroupoid& g, int x);
/// Arrows into x.
std::vector<int> costar(const FiniteGroupoid& g, int x);

struct ObjectGroup {
  GroupPtr group;
  std::vector<int> loops;  // group element index -> arrow id
  std::vector<int> index_of_arrow;  // arrow id -> group element index or -1
};
/// The object group G(x) with composition as multiplication.
ObjectGroup object_group(const FiniteGroupoid& g, int x);

struct Components {
  int count = 0;
  std::vector<int> component_of_object;
  std::vector<int> component_of_arrow;
};
Components transitive_components(const FiniteGroupoid& g);
bool is_transitive(const FiniteGroupoid& g);

/// The full subgroupoid on one transitive component, with maps back into g.
struct ComponentSubgroupoid {
  GroupoidPtr groupoid;
  std::vector<int> object_map;  // sub object -> g object
  std::vector<int> arrow_map;   // sub arrow -> g arrow
};
ComponentSubgroupoid component_subgroupoid(const GroupoidPtr& g, int component);

/// A verified morphism of groupoids (preserves src, tgt, identities, and all
/// defined compositions).
struct GroupoidMorphism {
  GroupoidPtr source, target;
  std::vector<int> object_map;
  std::vector<int> arrow_map;
};

CheckReport validate_groupoid_morphism(const GroupoidMorphism& m);
GroupoidMorphism make_groupoid_morphism(GroupoidPtr src, GroupoidPtr tgt,
                                        std::vector<int> object_map, std::vector<int> arrow_map);
GroupoidMorphism identity_groupoid_morphism(GroupoidPtr g);
GroupoidMorphism compose(const GroupoidMorphism& f, const GroupoidMorphism& g);

/// Covering test: every star of the source must map bijectively onto the
/// star at the image object.  On failure `witness` names the object and a
/// missed or duplicated arrow.
struct CoveringCheck {
  bool is_covering = false;
  std::string witness;
};
CoveringCheck is_covering_morphism(const GroupoidMorphism& p);

/// Regularity: over each loop of the target, the fibre consists of all
/// loops or of no loops.  Throws NotACovering when p is not a covering.
bool is_regular_covering(const GroupoidMorphism& p);
/// Independent characterisation: p(H(y)) is normal in G(py) for all y.
bool regular_by_normality(const GroupoidMorphism& p);
bool is_pi0_proper(const GroupoidMorphism& p);

/// An action of a groupoid on a set via an anchor map w.
struct GroupoidActionOnSet {
  GroupoidPtr groupoid;
  int carrier_size = 0;
  std::vector<int> anchor;  // w : carrier -> objects
  std::vector<int> act;     // [a * arrows + g] -> carrier, -1 when w(a) != src(g)

  int operator()(int a, int g) const {
    return act[static_cast<size_t>(a) * groupoid->num_arrows() + g];
  }
};
CheckReport validate_groupoid_action(const GroupoidActionOnSet& a);
GroupoidActionOnSet make_groupoid_action(GroupoidPtr g, int carrier_size, std::vector<int> anchor,
                                         std::vector<int> act);

/// The action groupoid A x| G together with the projection (a, g) |-> g,
/// which is re-checked to be a covering morphism.
struct ActionGroupoid {
  GroupoidPtr groupoid;
  GroupoidMorphism projection;
  /// arrow id -> (carrier element, base arrow)
  std::vector<std::pair<int, int>> pairs;
  /// [a * base arrows + g] -> arrow id or -1
  std::vector<int> arrow_of_pair;
};
ActionGroupoid action_groupoid(const GroupoidActionOnSet& act);

/// Covering of a transitive groupoid from a subgroup N of G(x): the carrier
/// is the set of right cosets N o g over the star at x.  Cosets are named by
/// their smallest arrow id; the base point is the coset of 1_x.
struct SubgroupCovering {
  GroupoidPtr cover;
  GroupoidMorphism projection;
  int base_point = 0;                  // object of the cover: coset of 1_x
  std::vector<std::vector<int>> cosets;  // per cover object, sorted arrow ids
};
SubgroupCovering covering_from_subgroup(const GroupoidPtr& g, int x,
                                        const std::vector<int>& subgroup_arrows);

/// Per-component choice for covering_from_transversal.
struct TransversalChoice {
  int object = 0;
  std::vector<int> subgroup_arrows;  // arrows of the ambient groupoid
};
struct TransversalCovering {
  GroupoidPtr cover;
  GroupoidMorphism projection;
  bool universal = false;  // all chosen subgroups trivial
  bool pi0_proper = false;
};
TransversalCovering covering_from_transversal(const GroupoidPtr& g,
                                              const std::vector<TransversalChoice>& choices);

/// The unique isomorphism h between the coverings built from N(x) and from
/// N(y) = a^{-1} o N(x) o a, over g, sending the coset of a to the coset of
/// 1_y.  Existence and uniqueness are re-verified by lifting.
GroupoidMorphism conjugate_cover_isomorphism(const GroupoidPtr& g, int x,
                                             const std::vector<int>& subgroup_arrows, int a);

GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts);

}  // namespace crossmod

#endif
