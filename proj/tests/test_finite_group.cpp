#include "crossmod/finite_group.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace crossmod;

TEST_CASE("group axioms validate on standard tables") {
  CHECK(FiniteGroup::validate_table(cyclic(2)->table()).ok);
  CHECK(FiniteGroup::validate_table(symmetric3()->table()).ok);
  CHECK(FiniteGroup::validate_table(quaternion8()->table()).ok);
  CHECK(FiniteGroup::validate_table(dihedral(4)->table()).ok);
  CHECK(cyclic(4)->identity() == 0);
  CHECK_FALSE(symmetric3()->is_abelian());
  CHECK(quaternion8()->element_order(1) == 4);  // i has order 4
  CHECK(dihedral(4)->element_order(4) == 2);    // a reflection
}

TEST_CASE("corrupted table is rejected with a witness") {
  auto t = cyclic(4)->table();
  t[1][1] = 3;  // 1+1 should be 2; breaks associativity
  auto r = FiniteGroup::validate_table(t);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("associativity") != std::string::npos);
}

TEST_CASE("morphism construction checks the homomorphism property") {
  auto c4 = cyclic(4);
  auto idm = make_morphism(c4, c4, {0, 1, 2, 3});
  CHECK(idm.is_bijective());
  auto dbl = make_morphism(c4, c4, {0, 2, 0, 2});
  CHECK(dbl.kernel() == std::vector<int>{0, 2});
  // C2 -> C4, 1 |-> 1 is not a homomorphism (image has order 4)
  CHECK_THROWS_AS(make_morphism(cyclic(2), c4, {0, 1}), NotAHomomorphism);
}

TEST_CASE("subgroups, normality, quotients") {
  auto c4 = cyclic(4);
  CHECK(subgroup_closure(*c4, {2}) == std::vector<int>{0, 2});
  CHECK(is_normal_subgroup(*c4, {0, 2}));

  auto q = quotient_group(c4, {0, 2});
  CHECK(q.group->order() == 2);
  CHECK(q.projection.map == std::vector<int>{0, 1, 0, 1});

  auto s3 = symmetric3();
  auto a3 = subgroup_closure(*s3, {3});  // a 3-cycle generates A3
  CHECK(a3.size() == 3);
  CHECK(is_normal_subgroup(*s3, a3));
  CHECK(quotient_group(s3, a3).group->order() == 2);
  // a transposition generates a non-normal C2
  auto c2sub = subgroup_closure(*s3, {1});
  CHECK(c2sub.size() == 2);
  CHECK_FALSE(is_normal_subgroup(*s3, c2sub));
  CHECK_THROWS_AS(quotient_group(s3, c2sub), NotNormal);

  // quotient by the trivial subgroup is an isomorphic copy
  auto qt = quotient_group(s3, {s3->identity()});
  CHECK(qt.group->order() == 6);
  CHECK(find_isomorphism(qt.group, s3).has_value());

  // cosets partition the group into equal-size classes
  for (int c = 0; c < q.group->order(); ++c) {
    int size = 0;
    for (int x = 0; x < c4->order(); ++x)
      if (q.projection(x) == c) ++size;
    CHECK(size == 2);
  }
}

TEST_CASE("automorphism groups of small groups") {
  CHECK(automorphism_group(cyclic(2)).group->order() == 1);
  CHECK(automorphism_group(cyclic(4)).group->order() == 2);
  CHECK(automorphism_group(klein_four()).group->order() == 6);
  auto aut = automorphism_group(symmetric3());
  CHECK(aut.group->order() == 6);

  // closure under composition and inverse, by table scan
  auto av4 = automorphism_group(klein_four());
  std::set<std::vector<int>> maps(av4.maps.begin(), av4.maps.end());
  for (const auto& f : av4.maps)
    for (const auto& g : av4.maps) {
      std::vector<int> c(4);
      for (int x = 0; x < 4; ++x) c[x] = g[f[x]];
      CHECK(maps.count(c) == 1);
    }
  CHECK_THROWS_AS(automorphism_group(cyclic(13)), BoundExceeded);
}

TEST_CASE("right actions validate the axioms") {
  auto c2 = cyclic(2);
  auto c4 = cyclic(4);
  // inversion action of C2 on C4
  std::vector<int> t(8);
  for (int m = 0; m < 4; ++m)
    for (int p = 0; p < 2; ++p) t[m * 2 + p] = p == 0 ? m : (4 - m) % 4;
  CHECK_NOTHROW(make_right_action(c2, c4, t));
  t[1 * 2 + 1] = 1;  // breaks the automorphism property
  CHECK_FALSE(validate_right_action(c2, c4, t).ok);
  CHECK_NOTHROW(conjugation_action(symmetric3()));
}

TEST_CASE("homomorphism enumeration and isomorphism search") {
  CHECK(all_homomorphisms(cyclic(2), cyclic(2)).size() == 2);
  CHECK(all_homomorphisms(cyclic(3), cyclic(2)).size() == 1);
  CHECK(all_homomorphisms(cyclic(2), klein_four()).size() == 4);
  CHECK(all_homomorphisms(symmetric3(), cyclic(2)).size() == 2);
  CHECK(find_isomorphism(klein_four(), cyclic(4)) == std::nullopt);
  auto dp = direct_product(cyclic(2), cyclic(2));
  CHECK(find_isomorphism(dp.group, klein_four()).has_value());
  CHECK(find_isomorphism(dihedral(3), symmetric3()).has_value());
}

TEST_CASE("subgroup enumeration") {
  auto subs = all_subgroups(*symmetric3());
  CHECK(subs.size() == 6);  // 1, three C2, A3, S3
  auto q8 = all_subgroups(*quaternion8());
  CHECK(q8.size() == 6);  // 1, center, three C4, Q8
}
