#include "crossmod/groupoid.hpp"

#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

using namespace crossmod;

TEST_CASE("stars and object groups of the one-object C4 groupoid") {
  auto g = one_object_groupoid(cyclic(4));
  CHECK(star(*g, 0).size() == 4);
  CHECK(costar(*g, 0).size() == 4);
  CHECK(object_group(*g, 0).group->order() == 4);
  CHECK_THROWS_AS(star(*g, 1), UnknownObject);
  CHECK(transitive_components(*g).count == 1);
}

TEST_CASE("covering from a subgroup of C4") {
  auto g = one_object_groupoid(cyclic(4));
  auto cov = covering_from_subgroup(g, 0, {0, 2});
  CHECK(cov.cover->num_objects() == 2);
  CHECK(cov.cover->num_arrows() == 8);
  for (int x = 0; x < 2; ++x) {
    CHECK(star(*cov.cover, x).size() == 4);
    CHECK(object_group(*cov.cover, x).group->order() == 2);
  }
  CHECK(is_covering_morphism(cov.projection).is_covering);
  CHECK(is_regular_covering(cov.projection));
  CHECK(regular_by_normality(cov.projection));

  // N = G(x): an equivalence onto g; N = 1: universal on this component
  auto full = covering_from_subgroup(g, 0, {0, 1, 2, 3});
  CHECK(full.cover->num_objects() == 1);
  CHECK(full.cover->num_arrows() == 4);
  auto univ = covering_from_subgroup(g, 0, {0});
  CHECK(univ.cover->num_objects() == 4);
  for (int x = 0; x < 4; ++x) CHECK(object_group(*univ.cover, x).group->order() == 1);
}

TEST_CASE("covering detection and witnesses") {
  auto g = one_object_groupoid(cyclic(4));
  CHECK(is_covering_morphism(identity_groupoid_morphism(g)).is_covering);
  CHECK(is_regular_covering(identity_groupoid_morphism(g)));
  CHECK(is_pi0_proper(identity_groupoid_morphism(g)));

  auto cov = covering_from_subgroup(g, 0, {0, 2});
  // collapse all arrows to the identity: a valid morphism, not a covering
  std::vector<int> om(cov.cover->num_objects(), 0);
  std::vector<int> am(cov.cover->num_arrows(), g->identity(0));
  auto collapse = make_groupoid_morphism(cov.cover, g, om, am);
  auto cc = is_covering_morphism(collapse);
  CHECK_FALSE(cc.is_covering);
  CHECK_FALSE(cc.witness.empty());
  CHECK_THROWS_AS(is_regular_covering(collapse), NotACovering);

  // composite of coverings is a covering
  auto lifted = covering_from_subgroup(cov.cover, cov.base_point, {cov.cover->identity(cov.base_point)});
  auto comp = compose(lifted.projection, cov.projection);
  CHECK(is_covering_morphism(comp).is_covering);
}

TEST_CASE("action groupoids") {
  auto g = one_object_groupoid(cyclic(4));

  // trivial action on a single point gives back the base
  std::vector<int> anchor = {0};
  std::vector<int> act(4);
  std::iota(act.begin(), act.end(), 0);
  for (int i = 0; i < 4; ++i) act[i] = 0;
  auto triv = make_groupoid_action(g, 1, anchor, act);
  auto ag = action_groupoid(triv);
  CHECK(ag.groupoid->num_objects() == 1);
  CHECK(ag.groupoid->num_arrows() == 4);
  CHECK(is_covering_morphism(ag.projection).is_covering);

  // right translation of G on itself: one arrow per ordered pair
  std::vector<int> anchor2(4, 0);
  std::vector<int> act2(16);
  auto c4 = cyclic(4);
  for (int a = 0; a < 4; ++a)
    for (int x = 0; x < 4; ++x) act2[a * 4 + x] = c4->mul(a, x);
  auto trans = make_groupoid_action(g, 4, anchor2, act2);
  auto ag2 = action_groupoid(trans);
  CHECK(ag2.groupoid->num_arrows() == 16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int count = 0;
      for (int i = 0; i < 16; ++i)
        if (ag2.groupoid->src(i) == a && ag2.groupoid->tgt(i) == b) ++count;
      CHECK(count == 1);  // 1-transitive
    }

  // corrupt the action table
  act2[1 * 4 + 1] = 0;
  CHECK_FALSE(validate_groupoid_action(GroupoidActionOnSet{g, 4, anchor2, act2}).ok);
}

TEST_CASE("components and disjoint unions") {
  auto a = one_object_groupoid(cyclic(2));
  auto b = one_object_groupoid(cyclic(3));
  auto u = disjoint_union({a, b});
  CHECK(u->num_objects() == 2);
  CHECK(u->num_arrows() == 5);
  CHECK(transitive_components(*u).count == 2);
}

TEST_CASE("transversal coverings and the universal flag") {
  auto a = one_object_groupoid(cyclic(2));
  auto b = one_object_groupoid(cyclic(3));
  auto u = disjoint_union({a, b});

  // both trivial: universal
  auto t1 = covering_from_transversal(u, {{0, {0}}, {1, {2}}});
  CHECK(t1.universal);
  CHECK(t1.pi0_proper);
  CHECK(is_covering_morphism(t1.projection).is_covering);

  // one non-trivial: not universal
  auto t2 = covering_from_transversal(u, {{0, {0, 1}}, {1, {2}}});
  CHECK_FALSE(t2.universal);

  // full subgroups: an equivalence onto u
  auto t3 = covering_from_transversal(u, {{0, {0, 1}}, {1, {2, 3, 4}}});
  CHECK(t3.cover->num_objects() == 2);
  CHECK(t3.cover->num_arrows() == 5);

  CHECK_THROWS_AS(covering_from_transversal(u, {{0, {0}}}), MissingComponentChoice);
}

TEST_CASE("conjugate subgroups give isomorphic pointed coverings") {
  auto g = one_object_groupoid(cyclic(4));

  // a = 1_x: identity isomorphism
  auto h0 = conjugate_cover_isomorphism(g, 0, {0, 2}, 0);
  CHECK(h0.object_map == std::vector<int>{0, 1});

  // abelian: conjugation fixes N, but a odd translates the cosets
  auto h1 = conjugate_cover_isomorphism(g, 0, {0, 2}, 1);
  CHECK(h1.object_map == std::vector<int>{1, 0});
  auto h2 = conjugate_cover_isomorphism(g, 0, {0, 2}, 2);
  CHECK(h2.object_map == std::vector<int>{0, 1});

  // S3 with a non-normal subgroup: non-trivial coset bijection
  auto s = one_object_groupoid(symmetric3());
  auto hs = conjugate_cover_isomorphism(s, 0, {0, 1}, 3);
  bool nontrivial = false;
  for (size_t i = 0; i < hs.object_map.size(); ++i)
    if (hs.object_map[i] != static_cast<int>(i)) nontrivial = true;
  CHECK(nontrivial);
}

TEST_CASE("regularity equals normality on random coverings") {
  std::mt19937 rng(7);
  std::vector<GroupPtr> groups = {cyclic(4), cyclic(6), symmetric3(), dihedral(4), quaternion8(),
                                  klein_four()};
  for (int it = 0; it < 40; ++it) {
    auto grp = groups[rng() % groups.size()];
    auto g = one_object_groupoid(grp);
    auto subs = all_subgroups(*grp);
    auto n = subs[rng() % subs.size()];
    auto cov = covering_from_subgroup(g, 0, n);
    CHECK(is_regular_covering(cov.projection) == regular_by_normality(cov.projection));
  }
}
