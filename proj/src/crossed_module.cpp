#include "crossmod/crossed_module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crossmod {

CheckReport CrossedModule::validate(const GroupPtr& m, const GroupPtr& p, const GroupMorphism& mu,
                                    const RightGroupAction& action) {
  if (mu.source.get() != m.get() || mu.target.get() != p.get())
    return CheckReport::fail("mu does not run M -> P");
  if (action.group.get() != p.get() || action.carrier.get() != m.get())
    return CheckReport::fail("action is not a P-action on M");
  for (int x = 0; x < m->order(); ++x)
    for (int q = 0; q < p->order(); ++q)
      if (mu.map[action(x, q)] != p->conj(mu.map[x], q)) {
        std::ostringstream os;
        os << "CM1 fails at (m, p) = (" << x << ", " << q << ")";
        return CheckReport::fail(os.str());
      }
  for (int n = 0; n < m->order(); ++n)
    for (int x = 0; x < m->order(); ++x)
      if (action(n, mu.map[x]) != m->conj(n, x)) {
        std::ostringstream os;
        os << "CM2 fails at (m, n) = (" << x << ", " << n << ")";
        return CheckReport::fail(os.str());
      }
  // standard consequences, re-checked by scan
  std::vector<int> image = mu.image();
  if (!is_normal_subgroup(*p, image)) return CheckReport::fail("mu M is not normal in P");
  std::vector<int> ker = mu.kernel();
  std::set<int> kset(ker.begin(), ker.end());
  for (int a : ker)
    for (int x = 0; x < m->order(); ++x)
      if (m->mul(a, x) != m->mul(x, a))
        return CheckReport::fail("Ker mu is not central in M");
  for (int a : ker)
    for (int x : image)
      if (action(a, x) != a) return CheckReport::fail("mu M does not act trivially on Ker mu");
  return CheckReport::pass();
}

CrossedModule::CrossedModule(GroupPtr m, GroupPtr p, GroupMorphism mu, RightGroupAction action)
    : m_(std::move(m)), p_(std::move(p)), mu_(std::move(mu)), action_(std::move(action)) {
  CheckReport r = validate(m_, p_, mu_, action_);
  if (!r.ok) throw ValidationFailed("crossed module: " + r.detail);
  kernel_ = mu_.kernel();
  a_ = subgroup_as_group(m_, kernel_);
  q_ = quotient_group(p_, mu_.image());
}

XmPtr make_crossed_module(GroupPtr m, GroupPtr p, GroupMorphism mu, RightGroupAction action) {
  return std::make_shared<const CrossedModule>(std::move(m), std::move(p), std::move(mu),
                                               std::move(action));
}

CheckReport validate_crossed_morphism(const CrossedModuleMorphism& m) {
  const auto& src = *m.source;
  const auto& tgt = *m.target;
  if (m.f1.source.get() != src.M().get() || m.f1.target.get() != tgt.M().get())
    return CheckReport::fail("f1 does not run between the top groups");
  if (m.f2.source.get() != src.P().get() || m.f2.target.get() != tgt.P().get())
    return CheckReport::fail("f2 does not run between the bottom groups");
  for (int n = 0; n < src.M()->order(); ++n)
    if (m.f2.map[src.mu().map[n]] != tgt.mu().map[m.f1.map[n]]) {
      std::ostringstream os;
      os << "square does not commute at m = " << n;
      return CheckReport::fail(os.str());
    }
  for (int n = 0; n < src.M()->order(); ++n)
    for (int q = 0; q < src.P()->order(); ++q)
      if (m.f1.map[src.act(n, q)] != tgt.act(m.f1.map[n], m.f2.map[q])) {
        std::ostringstream os;
        os << "equivariance fails at (m, p) = (" << n << ", " << q << ")";
        return CheckReport::fail(os.str());
      }
  return CheckReport::pass();
}

CrossedModuleMorphism make_crossed_morphism(XmPtr src, XmPtr tgt, GroupMorphism f1,
                                            GroupMorphism f2) {
  CrossedModuleMorphism m{std::move(src), std::move(tgt), std::move(f1), std::move(f2)};
  CheckReport r = validate_crossed_morphism(m);
  if (!r.ok) throw ValidationFailed("crossed module morphism: " + r.detail);
  return m;
}

CrossedModuleMorphism identity_crossed_morphism(XmPtr x) {
  auto f1 = identity_morphism(x->M());
  auto f2 = identity_morphism(x->P());
  return make_crossed_morphism(x, x, std::move(f1), std::move(f2));
}

bool is_crossed_covering(const CrossedModuleMorphism& m) {
  return validate_crossed_morphism(m).ok && m.f1.is_bijective();
}

bool is_universal_crossed_covering(const CrossedModuleMorphism& m) {
  if (!is_crossed_covering(m)) return false;
  const auto& nu = m.source->mu();
  if (!nu.is_injective()) return false;
  // induced Coker nu -> Coker mu through f2 must be an isomorphism
  const auto& qs = m.source->cokernel();
  const auto& qt = m.target->cokernel();
  if (qs.group->order() != qt.group->order()) return false;
  std::vector<int> induced(qs.group->order());
  for (int c = 0; c < qs.group->order(); ++c)
    induced[c] = qt.projection.map[m.f2.map[qs.representatives[c]]];
  // well-defined by construction; check bijectivity and multiplicativity
  std::set<int> hit(induced.begin(), induced.end());
  if (static_cast<int>(hit.size()) != qt.group->order()) return false;
  for (int a = 0; a < qs.group->order(); ++a)
    for (int b = 0; b < qs.group->order(); ++b)
      if (induced[qs.group->mul(a, b)] != qt.group->mul(induced[a], induced[b])) return false;
  return true;
}

XmPtr crossed_module_from_normal_inclusion(GroupPtr p, const std::vector<int>& normal_subset) {
  if (!is_subgroup(*p, normal_subset))
    throw HypothesisViolated("normal inclusion: subset is not a subgroup");
  if (!is_normal_subgroup(*p, normal_subset))
    throw HypothesisViolated("normal inclusion: subgroup is not normal");
  auto sub = subgroup_as_group(p, normal_subset);
  const int nm = sub.group->order(), np = p->order();
  std::vector<int> act(static_cast<size_t>(nm) * np);
  for (int m = 0; m < nm; ++m)
    for (int q = 0; q < np; ++q) {
      int conj = p->conj(sub.elements[m], q);
      int idx = sub.index_of[conj];
      if (idx < 0)
        throw HypothesisViolated("normal inclusion: conjugation leaves the subgroup");
      act[static_cast<size_t>(m) * np + q] = idx;
    }
  auto mu = make_morphism(sub.group, p, sub.elements);
  return make_crossed_module(sub.group, p, std::move(mu),
                             make_right_action(p, sub.group, std::move(act)));
}

XmPtr crossed_module_from_module(GroupPtr p, GroupPtr m, RightGroupAction action) {
  if (!m->is_abelian()) throw HypothesisViolated("module crossed module: M must be abelian");
  if (action.group.get() != p.get() || action.carrier.get() != m.get())
    throw HypothesisViolated("module crossed module: action must be P on M");
  return make_crossed_module(m, p, zero_morphism(m, p), std::move(action));
}

XmPtr crossed_module_inner(GroupPtr m, int aut_bound) {
  auto aut = automorphism_group(m, aut_bound);
  // chi_M(x) = conjugation by x; the action of an automorphism is evaluation
  std::vector<int> chi(m->order());
  for (int x = 0; x < m->order(); ++x) {
    std::vector<int> conj_map(m->order());
    for (int n = 0; n < m->order(); ++n) conj_map[n] = m->conj(n, x);
    int idx = -1;
    for (size_t i = 0; i < aut.maps.size(); ++i)
      if (aut.maps[i] == conj_map) { idx = static_cast<int>(i); break; }
    if (idx < 0) throw HypothesisViolated("inner automorphism not found in Aut(M)");
    chi[x] = idx;
  }
  const int na = aut.group->order();
  std::vector<int> act(static_cast<size_t>(m->order()) * na);
  for (int n = 0; n < m->order(); ++n)
    for (int a = 0; a < na; ++a) act[static_cast<size_t>(n) * na + a] = aut.maps[a][n];
  auto mu = make_morphism(m, aut.group, std::move(chi));
  return make_crossed_module(m, aut.group, std::move(mu),
                             make_right_action(aut.group, m, std::move(act)));
}

XmPtr crossed_module_from_central_surjection(const GroupMorphism& mu) {
  if (!mu.is_surjective()) throw HypothesisViolated("central surjection: mu is not surjective");
  const auto& m = mu.source;
  const auto& p = mu.target;
  for (int a : mu.kernel())
    for (int x = 0; x < m->order(); ++x)
      if (m->mul(a, x) != m->mul(x, a))
        throw HypothesisViolated("central surjection: kernel is not central");
  // m^q = lifted conjugation; well-defined since the kernel is central
  std::vector<int> lift(p->order(), -1);
  for (int x = 0; x < m->order(); ++x)
    if (lift[mu.map[x]] < 0) lift[mu.map[x]] = x;
  const int np = p->order();
  std::vector<int> act(static_cast<size_t>(m->order()) * np);
  for (int x = 0; x < m->order(); ++x)
    for (int q = 0; q < np; ++q)
      act[static_cast<size_t>(x) * np + q] = m->conj(x, lift[q]);
  return make_crossed_module(m, p, mu, make_right_action(p, m, std::move(act)));
}

KernelModule kernel_as_q_module(const CrossedModule& x) {
  KernelModule km;
  km.A = x.A().group;
  km.include_in_M = x.A().embedding;
  if (!km.A->is_abelian())
    throw ValidationFailed("kernel_as_q_module: kernel is not abelian");
  km.structure = abelian_structure(*km.A);
  const auto& q = x.cokernel();
  const int nq = q.group->order();
  km.q_action.assign(nq, std::vector<int>(km.A->order()));
  for (int c = 0; c < nq; ++c) {
    int rep = q.representatives[c];
    for (int a = 0; a < km.A->order(); ++a) {
      int image = x.act(x.A().elements[a], rep);
      int idx = x.A().index_of[image];
      if (idx < 0) throw ValidationFailed("kernel_as_q_module: action leaves the kernel");
      km.q_action[c][a] = idx;
    }
    // representative independence across the whole coset
    for (int p = 0; p < x.P()->order(); ++p) {
      if (q.projection.map[p] != c) continue;
      for (int a = 0; a < km.A->order(); ++a)
        if (x.act(x.A().elements[a], p) != x.A().elements[km.q_action[c][a]])
          throw ValidationFailed("kernel_as_q_module: action depends on the representative");
    }
  }
  return km;
}

}  // namespace crossmod
