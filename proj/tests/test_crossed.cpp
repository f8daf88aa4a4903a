#include <set>

#include "crossmod/group_groupoid.hpp"
#include "doctest.h"

using namespace crossmod;

namespace {

XmPtr xm_c2_zero_c2() {
  auto c2 = cyclic(2);
  return crossed_module_from_module(c2, c2, trivial_action(c2, c2));
}

XmPtr xm_c4_times2() {
  auto c4 = cyclic(4);
  return make_crossed_module(c4, c4, make_morphism(c4, c4, {0, 2, 0, 2}),
                             trivial_action(c4, c4));
}

int arrows_between(const FiniteGroupoid& g, int x, int y) {
  int n = 0;
  for (int a = 0; a < g.num_arrows(); ++a)
    if (g.src(a) == x && g.tgt(a) == y) ++n;
  return n;
}

}  // namespace

TEST_CASE("group-groupoid validation") {
  auto c4gg = one_object_group_groupoid(cyclic(4));
  CHECK(validate_group_groupoid(*c4gg).ok);

  // one object with a nonabelian composition group violates interchange
  auto s3 = symmetric3();
  GroupGroupoid bad{one_object_groupoid(s3), trivial_group(), s3};
  auto r = validate_group_groupoid(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("interchange") != std::string::npos);

  CHECK(validate_group_groupoid(*beta(*xm_c2_zero_c2()).gg).ok);
  CHECK(validate_group_groupoid(*beta(*xm_c4_times2()).gg).ok);
}

TEST_CASE("composition identities from the interchange law") {
  CHECK(composition_identities(*beta(*xm_c2_zero_c2()).gg).ok);
  auto s3 = symmetric3();
  auto a3s3 = crossed_module_from_normal_inclusion(s3, {0, 3, 4});
  CHECK(composition_identities(*beta(*a3s3).gg).ok);

  // replace the arrow group of beta(C2 -> 0 -> C2) (Klein four) by C4:
  // a valid group on the same arrows that breaks the identities
  auto b = beta(*xm_c2_zero_c2());
  GroupGroupoid corrupted{b.gg->groupoid, b.gg->object_group, cyclic(4)};
  CHECK_FALSE(composition_identities(corrupted).ok);
}

TEST_CASE("normal subgroupoids from subgroups of G(e)") {
  auto b = beta(*xm_c4_times2());
  auto og = object_group(*b.gg->groupoid, b.gg->e());
  REQUIRE(og.group->order() == 2);

  // trivial subgroup: identity arrows only
  auto triv = normal_subgroupoid_from_subgroup(b.gg, {b.gg->groupoid->identity(b.gg->e())});
  CHECK(triv.groupoid->num_arrows() == b.gg->groupoid->num_objects());

  // full G(e): two loops at each of the four objects
  auto full = normal_subgroupoid_from_subgroup(b.gg, og.loops);
  CHECK(full.groupoid->num_objects() == 4);
  CHECK(full.groupoid->num_arrows() == 8);
  for (int x = 0; x < 4; ++x) CHECK(arrows_between(*full.groupoid, x, x) == 2);
}

TEST_CASE("beta: shapes of the standard examples") {
  auto b0 = beta(*xm_c2_zero_c2());
  CHECK(b0.gg->groupoid->num_objects() == 2);
  CHECK(b0.gg->groupoid->num_arrows() == 4);
  for (int a = 0; a < 4; ++a) CHECK(b0.gg->groupoid->is_loop(a));
  CHECK(transitive_components(*b0.gg->groupoid).count == 2);

  auto c2 = cyclic(2);
  auto idc2 = crossed_module_from_normal_inclusion(c2, {0, 1});
  auto b1 = beta(*idc2);
  CHECK(b1.gg->groupoid->num_objects() == 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(arrows_between(*b1.gg->groupoid, x, y) == 1);

  auto s3 = symmetric3();
  auto a3s3 = crossed_module_from_normal_inclusion(s3, {0, 3, 4});
  auto b2 = beta(*a3s3);
  CHECK(b2.gg->groupoid->num_objects() == 6);
  CHECK(b2.gg->groupoid->num_arrows() == 18);
  auto comps = transitive_components(*b2.gg->groupoid);
  CHECK(comps.count == 2);
  for (int c = 0; c < 2; ++c) {
    int size = 0;
    for (int x = 0; x < 6; ++x)
      if (comps.component_of_object[x] == c) ++size;
    CHECK(size == 3);
  }
}

TEST_CASE("transitivity of beta reflects mu") {
  // mu epi <-> transitive; mu mono <-> simply transitive; mu iso <-> 1-transitive
  auto check = [](const XmPtr& x) {
    auto b = beta(*x);
    const auto& g = *b.gg->groupoid;
    bool trans = is_transitive(g);
    bool simply = true, onetrans = true;
    for (int p = 0; p < g.num_objects(); ++p)
      for (int q = 0; q < g.num_objects(); ++q) {
        int n = arrows_between(g, p, q);
        if (n > 1) simply = false;
        if (n != 1) onetrans = false;
      }
    CHECK(trans == x->mu().is_surjective());
    CHECK(simply == x->mu().is_injective());
    CHECK(onetrans == x->mu().is_bijective());
  };
  check(xm_c2_zero_c2());
  check(xm_c4_times2());
  check(crossed_module_from_normal_inclusion(symmetric3(), {0, 3, 4}));
  check(crossed_module_from_normal_inclusion(cyclic(2), {0, 1}));
}

TEST_CASE("delta recovers crossed modules") {
  // one-object abelian C4 group-groupoid: crossed module C4 -> 1
  auto d = delta(one_object_group_groupoid(cyclic(4)));
  CHECK(d.xm->M()->order() == 4);
  CHECK(d.xm->P()->order() == 1);

  // delta of beta(C2 -> 0 -> C2): M = C2, mu = 0
  auto d0 = delta(beta(*xm_c2_zero_c2()).gg);
  CHECK(d0.xm->M()->order() == 2);
  for (int m = 0; m < 2; ++m) CHECK(d0.xm->mu().map[m] == d0.xm->P()->identity());
}

TEST_CASE("delta-beta and beta-delta round trips with explicit isomorphisms") {
  std::vector<XmPtr> cat = {
      xm_c2_zero_c2(), xm_c4_times2(),
      crossed_module_from_normal_inclusion(symmetric3(), {0, 3, 4}),
      crossed_module_inner(cyclic(2)),
      crossed_module_from_normal_inclusion(cyclic(2), {0, 1}),
  };
  for (const auto& x : cat) {
    auto iso = delta_beta_iso(x);
    CHECK(iso.f1.is_bijective());
    CHECK(iso.f2.is_bijective());
    auto giso = beta_delta_iso(beta(*x).gg);
    CHECK(validate_gg_morphism(giso).ok);
  }
  // and a group-groupoid that was not built by beta
  CHECK(validate_gg_morphism(beta_delta_iso(one_object_group_groupoid(cyclic(4)))).ok);
}

TEST_CASE("pi0 and the object group at e") {
  auto p0 = pi0_and_object_group(beta(*xm_c4_times2()).gg);
  CHECK(p0.pi0->order() == 2);
  CHECK(p0.object_group_at_e->order() == 2);

  auto c2 = cyclic(2);
  auto p1 = pi0_and_object_group(beta(*crossed_module_from_normal_inclusion(c2, {0, 1})).gg);
  CHECK(p1.pi0->order() == 1);

  auto p2 = pi0_and_object_group(beta(*xm_c2_zero_c2()).gg);
  CHECK(p2.pi0->order() == 2);
  CHECK(p2.object_group_at_e->order() == 2);
}

TEST_CASE("crossed module constructors") {
  auto s3 = symmetric3();
  auto a3 = crossed_module_from_normal_inclusion(s3, {0, 3, 4});
  CHECK(a3->Q()->order() == 2);
  CHECK(a3->A().group->order() == 1);
  CHECK_THROWS_AS(crossed_module_from_normal_inclusion(s3, {0, 1}), HypothesisViolated);

  auto zc2 = xm_c2_zero_c2();
  CHECK(zc2->A().group->order() == 2);
  CHECK(zc2->Q()->order() == 2);

  auto chi = crossed_module_inner(cyclic(2));
  CHECK(chi->P()->order() == 1);
  CHECK(chi->M()->order() == 2);
  auto chis3 = crossed_module_inner(symmetric3());
  CHECK(chis3->P()->order() == 6);
  CHECK(chis3->A().group->order() == 1);

  auto c4 = cyclic(4);
  auto cs = crossed_module_from_central_surjection(make_morphism(c4, cyclic(2), {0, 1, 0, 1}));
  CHECK(cs->A().group->order() == 2);
  CHECK(cs->Q()->order() == 1);
  auto q8 = quaternion8();
  auto qq = quotient_group(q8, {0, 4});
  CHECK_NOTHROW(crossed_module_from_central_surjection(qq.projection));
  // non-central kernel
  auto proj_s3 = quotient_group(s3, {0, 3, 4}).projection;
  CHECK_THROWS_AS(crossed_module_from_central_surjection(proj_s3), HypothesisViolated);
}

TEST_CASE("crossed coverings") {
  auto a3 = crossed_module_from_normal_inclusion(symmetric3(), {0, 3, 4});
  CHECK(is_crossed_covering(identity_crossed_morphism(a3)));
  CHECK(is_universal_crossed_covering(identity_crossed_morphism(a3)));

  // f1 = x2 on C4 is not an isomorphism
  auto m3 = xm_c4_times2();
  auto c4 = cyclic(4);
  auto f1 = make_morphism(c4, c4, {0, 2, 0, 2});
  CrossedModuleMorphism notcov{m3, m3, f1, identity_morphism(c4)};
  CHECK_FALSE(is_crossed_covering(notcov));
}

TEST_CASE("kernel as a module over the cokernel") {
  auto km = kernel_as_q_module(*xm_c4_times2());
  CHECK(km.A->order() == 2);
  CHECK(km.structure.divisors == std::vector<long>{2});
  for (const auto& row : km.q_action)
    for (int a = 0; a < km.A->order(); ++a) CHECK(row[a] == a);  // trivial action

  auto a3 = crossed_module_from_normal_inclusion(symmetric3(), {0, 3, 4});
  CHECK(kernel_as_q_module(*a3).A->order() == 1);

  auto km0 = kernel_as_q_module(*xm_c2_zero_c2());
  CHECK(km0.A->order() == 2);
}

TEST_CASE("group-groupoid actions and their action groupoids") {
  auto m3 = xm_c4_times2();
  auto b = beta(*m3);

  // trivial carrier over a one-object base: projection is an isomorphism
  auto base1 = one_object_group_groupoid(cyclic(4));
  auto triv = trivial_group();
  std::vector<int> act1(base1->groupoid->num_arrows(), 0);
  auto a1 = make_gg_action(base1, triv, zero_morphism(triv, base1->object_group), act1);
  auto ag1 = group_action_groupoid(a1);
  CHECK(is_covering_morphism(ag1.projection.underlying).is_covering);
  CHECK(ag1.gg->groupoid->num_arrows() == base1->groupoid->num_arrows());
  CHECK(ag1.gg->groupoid->num_objects() == 1);

  // translation along w = id: a o g = tgt(g); the action groupoid is the base
  auto c4 = b.gg->object_group;
  const int na = b.gg->groupoid->num_arrows();
  std::vector<int> act2(static_cast<size_t>(c4->order()) * na, -1);
  for (int a = 0; a < c4->order(); ++a)
    for (int g = 0; g < na; ++g)
      if (b.gg->groupoid->src(g) == a) act2[static_cast<size_t>(a) * na + g] = b.gg->groupoid->tgt(g);
  auto a2 = make_gg_action(b.gg, c4, identity_morphism(c4), act2);
  auto ag2 = group_action_groupoid(a2);
  CHECK(ag2.gg->groupoid->num_arrows() == na);
  std::set<int> image(ag2.projection.underlying.arrow_map.begin(),
                      ag2.projection.underlying.arrow_map.end());
  CHECK(static_cast<int>(image.size()) == na);  // projection is an isomorphism onto the base

  // the same construction over beta(id: C2 -> C2) yields a 1-transitive cover
  auto idc2 = crossed_module_from_normal_inclusion(cyclic(2), {0, 1});
  auto bi = beta(*idc2);
  auto c2 = bi.gg->object_group;
  const int nb = bi.gg->groupoid->num_arrows();
  std::vector<int> act3(static_cast<size_t>(c2->order()) * nb, -1);
  for (int a = 0; a < c2->order(); ++a)
    for (int g = 0; g < nb; ++g)
      if (bi.gg->groupoid->src(g) == a) act3[static_cast<size_t>(a) * nb + g] = bi.gg->groupoid->tgt(g);
  auto ag3 = group_action_groupoid(make_gg_action(bi.gg, c2, identity_morphism(c2), act3));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(arrows_between(*ag3.gg->groupoid, x, y) == 1);

  // projections of action groupoids are crossed coverings after delta
  CHECK(is_crossed_covering(delta_morphism(ag2.projection)));
  CHECK(is_crossed_covering(delta_morphism(ag3.projection)));

  // an action violating the interchange law is rejected with a witness
  auto base = one_object_group_groupoid(cyclic(2));
  auto v4 = klein_four();
  std::vector<int> bad(static_cast<size_t>(4) * 2);
  for (int a = 0; a < 4; ++a) {
    bad[a * 2 + 0] = a;
    bad[a * 2 + 1] = a == 1 ? 2 : (a == 2 ? 1 : a);  // swap 1 and 2
  }
  CHECK_THROWS_AS(
      make_gg_action(base, v4, zero_morphism(v4, base->object_group), bad),
      InterchangeViolated);
}
