#include "crossmod/group_groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crossmod {

CheckReport validate_group_groupoid(const GroupGroupoid& g) {
  const auto& gpd = *g.groupoid;
  if (gpd.num_objects() == 0) return CheckReport::fail("object set is empty");
  if (g.object_group->order() != gpd.num_objects())
    return CheckReport::fail("object group order does not match object count");
  if (g.arrow_group->order() != gpd.num_arrows())
    return CheckReport::fail("arrow group order does not match arrow count");
  const auto& og = *g.object_group;
  const auto& ag = *g.arrow_group;
  for (int x = 0; x < gpd.num_arrows(); ++x)
    for (int y = 0; y < gpd.num_arrows(); ++y) {
      int m = ag.mul(x, y);
      if (gpd.src(m) != og.mul(gpd.src(x), gpd.src(y)))
        return CheckReport::fail("source is not a homomorphism at arrows (" + std::to_string(x) +
                                 ", " + std::to_string(y) + ")");
      if (gpd.tgt(m) != og.mul(gpd.tgt(x), gpd.tgt(y)))
        return CheckReport::fail("target is not a homomorphism at arrows (" + std::to_string(x) +
                                 ", " + std::to_string(y) + ")");
    }
  for (int p = 0; p < gpd.num_objects(); ++p)
    for (int q = 0; q < gpd.num_objects(); ++q)
      if (gpd.identity(og.mul(p, q)) != ag.mul(gpd.identity(p), gpd.identity(q)))
        return CheckReport::fail("1_{pq} != 1_p 1_q at objects (" + std::to_string(p) + ", " +
                                 std::to_string(q) + ")");
  if (gpd.identity(og.identity()) != ag.identity())
    return CheckReport::fail("1_e is not the arrow group identity");
  // interchange on pairs of composable pairs
  std::vector<std::pair<int, int>> composable;
  for (int a = 0; a < gpd.num_arrows(); ++a)
    for (int x = 0; x < gpd.num_arrows(); ++x)
      if (gpd.composable(a, x)) composable.emplace_back(a, x);
  for (auto [a, x] : composable) {
    int ax = gpd.compose(a, x);
    for (auto [b, y] : composable) {
      int by = gpd.compose(b, y);
      if (ag.mul(ax, by) != gpd.compose(ag.mul(a, b), ag.mul(x, y))) {
        std::ostringstream os;
        os << "interchange fails at (a o x)(b o y) with a=" << a << " x=" << x << " b=" << b
           << " y=" << y;
        return CheckReport::fail(os.str());
      }
    }
  }
  return CheckReport::pass();
}

GGPtr make_group_groupoid(GroupoidPtr gpd, GroupPtr object_group, GroupPtr arrow_group) {
  GroupGroupoid g{std::move(gpd), std::move(object_group), std::move(arrow_group)};
  CheckReport r = validate_group_groupoid(g);
  if (!r.ok) throw ValidationFailed("group-groupoid: " + r.detail);
  return std::make_shared<const GroupGroupoid>(std::move(g));
}

GGPtr one_object_group_groupoid(const GroupPtr& abelian) {
  return make_group_groupoid(one_object_groupoid(abelian), trivial_group(), abelian);
}

CheckReport composition_identities(const GroupGroupoid& g) {
  const auto& gpd = *g.groupoid;
  const auto e = g.e();
  // a o b = a bar-1_{ta} b
  for (int a = 0; a < gpd.num_arrows(); ++a)
    for (int b = 0; b < gpd.num_arrows(); ++b) {
      if (!gpd.composable(a, b)) continue;
      int y = gpd.tgt(a);
      int rhs = g.mul(g.mul(a, g.ginv(gpd.identity(y))), b);
      if (gpd.compose(a, b) != rhs)
        return CheckReport::fail("a o b != a bar-1_y b at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
    }
  // loops at e: conjugation identities
  auto og = object_group(gpd, e);
  for (int a = 0; a < gpd.num_arrows(); ++a) {
    int x = gpd.src(a), y = gpd.tgt(a);
    for (int gi : og.loops) {
      int lyg = g.mul(gpd.identity(y), gi);
      int lxg = g.mul(gpd.identity(x), gi);
      int lhs = gpd.compose(gpd.compose(a, lyg), gpd.inverse(a));
      if (lhs != lxg)
        return CheckReport::fail("a o (1_y g) o a^{-1} != 1_x g at arrow " + std::to_string(a) +
                                 ", loop " + std::to_string(gi));
      int lhs2 = g.mul(g.mul(a, gi), g.ginv(a));
      int rhs2 = g.mul(g.mul(gpd.identity(x), gi), g.ginv(gpd.identity(x)));
      if (lhs2 != rhs2)
        return CheckReport::fail("a g bar-a != 1_x g bar-1_x at arrow " + std::to_string(a) +
                                 ", loop " + std::to_string(gi));
    }
  }
  if (!og.group->is_abelian()) return CheckReport::fail("G(e) is not abelian");
  return CheckReport::pass();
}

NormalSubgroupoid normal_subgroupoid_from_subgroup(const GGPtr& g,
                                                   const std::vector<int>& n_of_e_arrows) {
  const auto& gpd = *g->groupoid;
  auto og = object_group(gpd, g->e());
  std::vector<int> elems;
  for (int a : n_of_e_arrows) {
    if (a < 0 || a >= gpd.num_arrows() || og.index_of_arrow[a] < 0)
      throw NotASubgroup("normal subgroupoid: arrow is not a loop at e");
    elems.push_back(og.index_of_arrow[a]);
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup(*og.group, elems))
    throw NotASubgroup("normal subgroupoid: arrows do not form a subgroup of G(e)");

  std::set<int> family;  // arrows 1_x n over all objects
  for (int x = 0; x < gpd.num_objects(); ++x)
    for (int ei : elems) family.insert(g->mul(gpd.identity(x), og.loops[ei]));

  // each N(x) is a subgroup of G(x), stable under conjugation by any arrow
  for (int x = 0; x < gpd.num_objects(); ++x) {
    std::vector<int> nx;
    for (int ei : elems) nx.push_back(g->mul(gpd.identity(x), og.loops[ei]));
    auto ogx = object_group(gpd, x);
    std::vector<int> sub;
    for (int a : nx) {
      if (ogx.index_of_arrow[a] < 0)
        throw ValidationFailed("normal subgroupoid: 1_x n is not a loop at x");
      sub.push_back(ogx.index_of_arrow[a]);
    }
    std::sort(sub.begin(), sub.end());
    if (!is_subgroup(*ogx.group, sub))
      throw ValidationFailed("normal subgroupoid: N(x) is not a subgroup");
  }
  for (int a = 0; a < gpd.num_arrows(); ++a) {
    int x = gpd.src(a), y = gpd.tgt(a);
    for (int ei : elems) {
      int lyn = g->mul(gpd.identity(y), og.loops[ei]);
      int conj = gpd.compose(gpd.compose(a, lyn), gpd.inverse(a));
      if (conj != g->mul(gpd.identity(x), og.loops[ei]))
        throw ValidationFailed("normal subgroupoid: family is not conjugation stable");
    }
  }

  std::vector<int> arrs(family.begin(), family.end());
  std::vector<int> index(gpd.num_arrows(), -1);
  for (size_t i = 0; i < arrs.size(); ++i) index[arrs[i]] = static_cast<int>(i);
  const int na = static_cast<int>(arrs.size());
  std::vector<Arrow> arrows(na);
  for (int i = 0; i < na; ++i) arrows[i] = Arrow{gpd.src(arrs[i]), gpd.tgt(arrs[i])};
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      if (gpd.composable(arrs[i], arrs[j])) {
        int c = index[gpd.compose(arrs[i], arrs[j])];
        if (c < 0) throw ValidationFailed("normal subgroupoid: family is not closed");
        comp[static_cast<size_t>(i) * na + j] = c;
      }
  std::vector<int> ids(gpd.num_objects()), inv(na);
  for (int x = 0; x < gpd.num_objects(); ++x) {
    ids[x] = index[gpd.identity(x)];
    if (ids[x] < 0) throw ValidationFailed("normal subgroupoid: missing identity arrow");
  }
  for (int i = 0; i < na; ++i) {
    inv[i] = index[gpd.inverse(arrs[i])];
    if (inv[i] < 0) throw ValidationFailed("normal subgroupoid: not closed under inverses");
  }
  auto sub = make_groupoid(gpd.num_objects(), std::move(arrows), std::move(comp), std::move(ids),
                           std::move(inv), gpd.label() + "_normal");
  return NormalSubgroupoid{sub, std::move(arrs)};
}

CheckReport validate_gg_morphism(const GroupGroupoidMorphism& m) {
  CheckReport r = validate_groupoid_morphism(m.underlying);
  if (!r.ok) return r;
  const auto& so = *m.source->object_group;
  const auto& to = *m.target->object_group;
  for (int p = 0; p < so.order(); ++p)
    for (int q = 0; q < so.order(); ++q)
      if (m.underlying.object_map[so.mul(p, q)] !=
          to.mul(m.underlying.object_map[p], m.underlying.object_map[q]))
        return CheckReport::fail("object map is not a homomorphism");
  const auto& sa = *m.source->arrow_group;
  const auto& ta = *m.target->arrow_group;
  for (int x = 0; x < sa.order(); ++x)
    for (int y = 0; y < sa.order(); ++y)
      if (m.underlying.arrow_map[sa.mul(x, y)] !=
          ta.mul(m.underlying.arrow_map[x], m.underlying.arrow_map[y]))
        return CheckReport::fail("arrow map is not a homomorphism");
  return CheckReport::pass();
}

GroupGroupoidMorphism make_gg_morphism(GGPtr src, GGPtr tgt, std::vector<int> object_map,
                                       std::vector<int> arrow_map) {
  GroupGroupoidMorphism m{src, tgt,
                          GroupoidMorphism{src->groupoid, tgt->groupoid, std::move(object_map),
                                           std::move(arrow_map)}};
  CheckReport r = validate_groupoid_morphism(m.underlying);
  if (!r.ok) throw ValidationFailed("group-groupoid morphism: " + r.detail);
  r = validate_gg_morphism(m);
  if (!r.ok) throw ValidationFailed("group-groupoid morphism: " + r.detail);
  return m;
}

DeltaResult delta(const GGPtr& g) {
  const auto& gpd = *g->groupoid;
  const int e = g->e();
  std::vector<int> cost = costar(gpd, e);
  std::vector<int> index(gpd.num_arrows(), -1);
  for (size_t i = 0; i < cost.size(); ++i) index[cost[i]] = static_cast<int>(i);
  const int nm = static_cast<int>(cost.size());
  std::vector<std::vector<int>> t(nm, std::vector<int>(nm));
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      int prod = g->mul(cost[a], cost[b]);
      if (index[prod] < 0) throw ValidationFailed("delta: costar not closed under the group law");
      t[a][b] = index[prod];
    }
  GroupPtr m = make_group(std::move(t), gpd.label() + "_coste");
  std::vector<int> mu_map(nm);
  for (int a = 0; a < nm; ++a) mu_map[a] = gpd.src(cost[a]);
  auto mu = make_morphism(m, g->object_group, std::move(mu_map));
  const int np = g->object_group->order();
  std::vector<int> act(static_cast<size_t>(nm) * np);
  for (int a = 0; a < nm; ++a)
    for (int p = 0; p < np; ++p) {
      int v = g->mul(g->mul(g->ginv(gpd.identity(p)), cost[a]), gpd.identity(p));
      if (index[v] < 0) throw ValidationFailed("delta: action leaves the costar");
      act[static_cast<size_t>(a) * np + p] = index[v];
    }
  auto xm = make_crossed_module(m, g->object_group, std::move(mu),
                                make_right_action(g->object_group, m, std::move(act)));
  return DeltaResult{std::move(xm), std::move(cost)};
}

int BetaResult::arrow_of(int p, int m) const { return p * m_order + m; }
int BetaResult::p_of(int arrow) const { return arrow / m_order; }
int BetaResult::m_of(int arrow) const { return arrow % m_order; }

BetaResult beta(const CrossedModule& x) {
  const auto& m = *x.M();
  const auto& p = *x.P();
  const int nm = m.order(), np = p.order();
  const int na = nm * np;
  auto aid = [&](int pp, int mm) { return pp * nm + mm; };

  std::vector<Arrow> arrows(na);
  for (int pp = 0; pp < np; ++pp)
    for (int mm = 0; mm < nm; ++mm)
      arrows[aid(pp, mm)] = Arrow{pp, p.mul(pp, x.mu().map[mm])};
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      if (arrows[a].tgt != arrows[b].src) continue;
      comp[static_cast<size_t>(a) * na + b] = aid(arrows[a].src, m.mul(a % nm, b % nm));
    }
  std::vector<int> ids(np), inv(na);
  for (int pp = 0; pp < np; ++pp) ids[pp] = aid(pp, m.identity());
  for (int a = 0; a < na; ++a) inv[a] = aid(arrows[a].tgt, m.inv(a % nm));
  auto gpd = make_groupoid(np, std::move(arrows), std::move(comp), std::move(ids), std::move(inv),
                           "beta(" + m.label() + "->" + p.label() + ")");

  // semidirect arrow group (p,m)(q,n) = (pq, m^q n)
  std::vector<std::vector<int>> t(na, std::vector<int>(na));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      int pp = a / nm, mm = a % nm, qq = b / nm, nn = b % nm;
      t[a][b] = aid(p.mul(pp, qq), m.mul(x.act(mm, qq), nn));
    }
  GroupPtr ag = make_group(std::move(t), "semidirect");
  BetaResult out;
  out.m_order = nm;
  out.gg = make_group_groupoid(std::move(gpd), x.P(), std::move(ag));
  return out;
}

CrossedModuleMorphism delta_morphism(const GroupGroupoidMorphism& f) {
  auto ds = delta(f.source);
  auto dt = delta(f.target);
  std::vector<int> tgt_index(f.target->groupoid->num_arrows(), -1);
  for (size_t i = 0; i < dt.costar_arrows.size(); ++i)
    tgt_index[dt.costar_arrows[i]] = static_cast<int>(i);
  std::vector<int> f1(ds.costar_arrows.size());
  for (size_t i = 0; i < ds.costar_arrows.size(); ++i) {
    int im = f.underlying.arrow_map[ds.costar_arrows[i]];
    if (tgt_index[im] < 0)
      throw ValidationFailed("delta_morphism: image leaves the costar at e");
    f1[i] = tgt_index[im];
  }
  auto m1 = make_morphism(ds.xm->M(), dt.xm->M(), std::move(f1));
  auto m2 = make_morphism(ds.xm->P(), dt.xm->P(), f.underlying.object_map);
  return make_crossed_morphism(ds.xm, dt.xm, std::move(m1), std::move(m2));
}

GroupGroupoidMorphism beta_morphism(const CrossedModuleMorphism& f) {
  auto bs = beta(*f.source);
  auto bt = beta(*f.target);
  const int nm_s = f.source->M()->order();
  std::vector<int> om = f.f2.map;
  std::vector<int> am(bs.gg->groupoid->num_arrows());
  for (int a = 0; a < bs.gg->groupoid->num_arrows(); ++a) {
    int pp = a / nm_s, mm = a % nm_s;
    am[a] = bt.arrow_of(f.f2.map[pp], f.f1.map[mm]);
  }
  return make_gg_morphism(bs.gg, bt.gg, std::move(om), std::move(am));
}

Pi0Result pi0_and_object_group(const GGPtr& g) {
  const auto& gpd = *g->groupoid;
  auto comps = transitive_components(gpd);
  // group law on components through representatives, verified well-defined
  std::vector<int> rep(comps.count, -1);
  for (int x = 0; x < gpd.num_objects(); ++x)
    if (rep[comps.component_of_object[x]] < 0) rep[comps.component_of_object[x]] = x;
  std::vector<std::vector<int>> t(comps.count, std::vector<int>(comps.count));
  for (int a = 0; a < comps.count; ++a)
    for (int b = 0; b < comps.count; ++b)
      t[a][b] = comps.component_of_object[g->object_group->mul(rep[a], rep[b])];
  for (int x = 0; x < gpd.num_objects(); ++x)
    for (int y = 0; y < gpd.num_objects(); ++y) {
      int c = comps.component_of_object[g->object_group->mul(x, y)];
      if (c != t[comps.component_of_object[x]][comps.component_of_object[y]])
        throw ValidationFailed("pi0: component product is not well-defined");
    }
  GroupPtr pi0 = make_group(std::move(t), "pi0(" + gpd.label() + ")");

  auto d = delta(g);
  const auto& coker = d.xm->cokernel();
  if (pi0->order() != coker.group->order())
    throw ValidationFailed("pi0: order differs from Coker mu");
  std::vector<int> iso(pi0->order());
  for (int c = 0; c < pi0->order(); ++c) iso[c] = coker.projection.map[rep[c]];
  // verified isomorphism
  std::set<int> hit(iso.begin(), iso.end());
  if (static_cast<int>(hit.size()) != pi0->order())
    throw ValidationFailed("pi0: canonical map to Coker mu is not bijective");
  for (int a = 0; a < pi0->order(); ++a)
    for (int b = 0; b < pi0->order(); ++b)
      if (iso[pi0->mul(a, b)] != coker.group->mul(iso[a], iso[b]))
        throw ValidationFailed("pi0: canonical map to Coker mu is not a homomorphism");

  auto og = object_group(gpd, g->e());
  // G(e) consists exactly of the kernel arrows of delta
  std::set<int> loops(og.loops.begin(), og.loops.end());
  std::set<int> kernel_arrows;
  for (int k : d.xm->kernel_elements()) kernel_arrows.insert(d.costar_arrows[k]);
  if (loops != kernel_arrows)
    throw ValidationFailed("pi0: G(e) differs from Ker mu");

  return Pi0Result{std::move(pi0), og.group, comps.component_of_object, std::move(iso)};
}

CrossedModuleMorphism delta_beta_iso(const XmPtr& x) {
  auto b = beta(*x);
  auto d = delta(b.gg);
  const int nm = x->M()->order();
  std::vector<int> f1(d.costar_arrows.size());
  for (size_t i = 0; i < d.costar_arrows.size(); ++i) {
    int arrow = d.costar_arrows[i];
    f1[i] = x->M()->inv(arrow % nm);
  }
  auto m1 = make_morphism(d.xm->M(), x->M(), std::move(f1));
  auto m2 = identity_morphism(x->P());
  auto iso = make_crossed_morphism(d.xm, x, std::move(m1), std::move(m2));
  if (!iso.f1.is_bijective() || !iso.f2.is_bijective())
    throw ValidationFailed("delta_beta_iso: not bijective");
  return iso;
}

GroupGroupoidMorphism beta_delta_iso(const GGPtr& g) {
  auto d = delta(g);
  auto b = beta(*d.xm);
  const auto& gpd = *g->groupoid;
  const int nm = d.xm->M()->order();
  std::vector<int> om(b.gg->groupoid->num_objects());
  for (int p = 0; p < static_cast<int>(om.size()); ++p) om[p] = p;
  std::vector<int> am(b.gg->groupoid->num_arrows());
  for (int a = 0; a < static_cast<int>(am.size()); ++a) {
    int p = a / nm, m = a % nm;
    int costar_arrow = d.costar_arrows[m];
    am[a] = g->mul(gpd.identity(p), gpd.inverse(costar_arrow));
  }
  auto iso = make_gg_morphism(b.gg, g, std::move(om), std::move(am));
  std::set<int> hit(iso.underlying.arrow_map.begin(), iso.underlying.arrow_map.end());
  if (static_cast<int>(hit.size()) != gpd.num_arrows())
    throw ValidationFailed("beta_delta_iso: not bijective on arrows");
  return iso;
}

CheckReport validate_gg_action(const GroupGroupoidActionOnGroup& a) {
  if (a.anchor.source.get() != a.carrier.get() ||
      a.anchor.target.get() != a.base->object_group.get())
    return CheckReport::fail("anchor must run A -> object group");
  CheckReport r = validate_groupoid_action(a.underlying);
  if (!r.ok) return r;
  for (size_t i = 0; i < a.anchor.map.size(); ++i)
    if (a.underlying.anchor[i] != a.anchor.map[i])
      return CheckReport::fail("underlying anchor differs from the group anchor");
  const auto& gpd = *a.base->groupoid;
  const int na = gpd.num_arrows();
  const int ca = a.carrier->order();
  for (int x = 0; x < ca; ++x)
    for (int g = 0; g < na; ++g) {
      if (a.anchor.map[x] != gpd.src(g)) continue;
      for (int y = 0; y < ca; ++y)
        for (int h = 0; h < na; ++h) {
          if (a.anchor.map[y] != gpd.src(h)) continue;
          int lhs = a.carrier->mul(a.underlying(x, g), a.underlying(y, h));
          int rhs = a.underlying(a.carrier->mul(x, y), a.base->mul(g, h));
          if (lhs != rhs) {
            std::ostringstream os;
            os << "(a o g)(b o h) != (ab) o (gh) at a=" << x << " g=" << g << " b=" << y
               << " h=" << h;
            return CheckReport::fail(os.str());
          }
        }
    }
  return CheckReport::pass();
}

GroupGroupoidActionOnGroup make_gg_action(GGPtr base, GroupPtr carrier, GroupMorphism anchor,
                                          std::vector<int> act) {
  GroupoidActionOnSet underlying{base->groupoid, carrier->order(), anchor.map, std::move(act)};
  GroupGroupoidActionOnGroup a{std::move(base), std::move(carrier), std::move(anchor),
                               std::move(underlying)};
  CheckReport r = validate_groupoid_action(a.underlying);
  if (!r.ok) throw ValidationFailed("group-groupoid action: " + r.detail);
  r = validate_gg_action(a);
  if (!r.ok) throw InterchangeViolated("group-groupoid action: " + r.detail);
  return a;
}

GroupActionGroupoid group_action_groupoid(const GroupGroupoidActionOnGroup& act) {
  auto ag = action_groupoid(act.underlying);
  const int n = static_cast<int>(ag.pairs.size());
  const auto& base = *act.base;
  // arrow group (a,g)(c,k) = (ac, gk)
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  const int nb = base.groupoid->num_arrows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, g] = ag.pairs[i];
      auto [c, k] = ag.pairs[j];
      int idx = ag.arrow_of_pair[static_cast<size_t>(act.carrier->mul(a, c)) * nb +
                                 base.mul(g, k)];
      if (idx < 0) throw ValidationFailed("group action groupoid: product pair missing");
      t[i][j] = idx;
    }
  GroupPtr arrow_grp = make_group(std::move(t), "action_semidirect");
  auto gg = make_group_groupoid(ag.groupoid, act.carrier, std::move(arrow_grp));
  auto proj = make_gg_morphism(gg, act.base, ag.projection.object_map, ag.projection.arrow_map);
  return GroupActionGroupoid{std::move(gg), std::move(proj), ag.pairs};
}

}  // namespace crossmod
