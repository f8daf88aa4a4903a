#include "crossmod/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace crossmod {

namespace {

std::string triple_to_string(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

CheckReport FiniteGroup::validate_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return CheckReport::fail("empty multiplication table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      std::ostringstream os;
      os << "row " << i << " has " << table[i].size() << " entries, expected " << n;
      return CheckReport::fail(os.str());
    }
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        std::ostringstream os;
        os << "entry (" << i << ", " << j << ") = " << table[i][j] << " out of range";
        return CheckReport::fail(os.str());
      }
    }
  }
  // two-sided identity
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (table[i][j] != j || table[j][i] != j) { ok = false; break; }
    if (ok) e = i;
  }
  if (e < 0) return CheckReport::fail("no two-sided identity element");
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return CheckReport::fail("associativity fails at triple " + triple_to_string(a, b, c));
  // two-sided inverses
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) { found = true; break; }
    if (!found) {
      std::ostringstream os;
      os << "element " << a << " has no two-sided inverse";
      return CheckReport::fail(os.str());
    }
  }
  return CheckReport::pass();
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string label)
    : label_(std::move(label)) {
  CheckReport r = validate_table(table);
  if (!r.ok) throw ValidationFailed("group '" + label_ + "': " + r.detail);
  order_ = static_cast<int>(table.size());
  mul_.resize(static_cast<size_t>(order_) * order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) mul_[static_cast<size_t>(i) * order_ + j] = table[i][j];
  for (int i = 0; i < order_; ++i) {
    bool ok = true;
    for (int j = 0; j < order_; ++j)
      if (mul(i, j) != j || mul(j, i) != j) { ok = false; break; }
    if (ok) { identity_ = i; break; }
  }
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) { inv_[a] = b; break; }
}

int FiniteGroup::power(int a, long long n) const {
  if (n < 0) return power(inv(a), -n);
  int acc = identity_;
  for (long long i = 0; i < n; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int acc = a, k = 1;
  while (acc != identity_) { acc = mul(acc, a); ++k; }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) t[i][j] = mul(i, j);
  return t;
}

GroupPtr make_group(std::vector<std::vector<int>> table, std::string label) {
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(label));
}

GroupPtr trivial_group() { return cyclic(1); }

GroupPtr cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return make_group(std::move(t), "C" + std::to_string(n));
}

GroupPtr klein_four() {
  // bitwise xor on {0,1,2,3}
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return make_group(std::move(t), "V4");
}

GroupPtr symmetric3() {
  // one-line permutations of {0,1,2} in lex order, composed left-to-right:
  // (p*q)(x) = q(p(x)).
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> base = {0, 1, 2};
  std::vector<int> idx = {0, 1, 2};
  do {
    perms.push_back({idx[0], idx[1], idx[2]});
  } while (std::next_permutation(idx.begin(), idx.end()));
  (void)base;
  auto find = [&](const std::array<int, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c;
      for (int x = 0; x < 3; ++x) c[x] = perms[j][perms[i][x]];
      t[i][j] = find(c);
    }
  return make_group(std::move(t), "S3");
}

GroupPtr dihedral(int n) {
  // elements: r^i (i < n), then s r^i; relations r^n = s^2 = 1, r s = s r^{-1}
  const int m = 2 * n;
  auto id = [&](int refl, int rot) { return refl * n + ((rot % n) + n) % n; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int ra = a % n, fa = a / n, rb = b % n, fb = b / n;
      // (s^fa r^ra)(s^fb r^rb) = s^{fa+fb} r^{±ra+rb}
      int rot = fb ? (rb - ra) : (ra + rb);
      t[a][b] = id(fa ^ fb, rot);
    }
  return make_group(std::move(t), "D" + std::to_string(n));
}

GroupPtr quaternion8() {
  // {1, i, j, k, -1, -i, -j, -k} as indices 0..7
  // encode as pairs (sign, axis); use explicit table via multiplication rules
  auto mulq = [](int a, int b) {
    int sa = a / 4, xa = a % 4, sb = b / 4, xb = b % 4;
    // axis mult table and sign for {1,i,j,k}
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int s = (sa + sb + sign[xa][xb]) % 2;
    return s * 4 + axis[xa][xb];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mulq(a, b);
  return make_group(std::move(t), "Q8");
}

bool GroupMorphism::is_injective() const {
  std::vector<char> seen(target->order(), 0);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool GroupMorphism::is_surjective() const {
  std::vector<char> seen(target->order(), 0);
  for (int v : map) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<int> GroupMorphism::kernel() const {
  std::vector<int> k;
  for (int x = 0; x < source->order(); ++x)
    if (map[x] == target->identity()) k.push_back(x);
  return k;
}

std::vector<int> GroupMorphism::image() const {
  std::set<int> im(map.begin(), map.end());
  return {im.begin(), im.end()};
}

GroupMorphism make_morphism(GroupPtr src, GroupPtr tgt, std::vector<int> map) {
  if (static_cast<int>(map.size()) != src->order())
    throw NotAHomomorphism("map is not total on the source");
  for (int v : map)
    if (v < 0 || v >= tgt->order()) throw NotAHomomorphism("map value out of range");
  for (int x = 0; x < src->order(); ++x)
    for (int y = 0; y < src->order(); ++y)
      if (map[src->mul(x, y)] != tgt->mul(map[x], map[y])) {
        std::ostringstream os;
        os << "not a homomorphism at pair (" << x << ", " << y << ")";
        throw NotAHomomorphism(os.str());
      }
  if (map[src->identity()] != tgt->identity())
    throw NotAHomomorphism("identity is not preserved");
  return GroupMorphism{std::move(src), std::move(tgt), std::move(map)};
}

GroupMorphism identity_morphism(GroupPtr g) {
  std::vector<int> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return GroupMorphism{g, g, std::move(m)};
}

GroupMorphism compose(const GroupMorphism& f, const GroupMorphism& g) {
  std::vector<int> m(f.source->order());
  for (int x = 0; x < f.source->order(); ++x) m[x] = g.map[f.map[x]];
  return GroupMorphism{f.source, g.target, std::move(m)};
}

GroupMorphism zero_morphism(GroupPtr src, GroupPtr tgt) {
  std::vector<int> m(src->order(), tgt->identity());
  return GroupMorphism{std::move(src), std::move(tgt), std::move(m)};
}

CheckReport validate_right_action(const GroupPtr& actor, const GroupPtr& carrier,
                                  const std::vector<int>& table) {
  const int np = actor->order(), nm = carrier->order();
  if (static_cast<int>(table.size()) != nm * np)
    return CheckReport::fail("action table has wrong size");
  auto a = [&](int m, int p) { return table[static_cast<size_t>(m) * np + p]; };
  for (int m = 0; m < nm; ++m)
    for (int p = 0; p < np; ++p)
      if (a(m, p) < 0 || a(m, p) >= nm) return CheckReport::fail("action value out of range");
  for (int m = 0; m < nm; ++m)
    if (a(m, actor->identity()) != m) {
      std::ostringstream os;
      os << "m^1 != m at m = " << m;
      return CheckReport::fail(os.str());
    }
  for (int m = 0; m < nm; ++m)
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q)
        if (a(a(m, p), q) != a(m, actor->mul(p, q))) {
          std::ostringstream os;
          os << "(m^p)^q != m^{pq} at (m, p, q) = " << triple_to_string(m, p, q);
          return CheckReport::fail(os.str());
        }
  for (int p = 0; p < np; ++p)
    for (int m = 0; m < nm; ++m)
      for (int n = 0; n < nm; ++n)
        if (a(carrier->mul(m, n), p) != carrier->mul(a(m, p), a(n, p))) {
          std::ostringstream os;
          os << "act(-, " << p << ") is not an automorphism at pair (" << m << ", " << n << ")";
          return CheckReport::fail(os.str());
        }
  return CheckReport::pass();
}

RightGroupAction make_right_action(GroupPtr actor, GroupPtr carrier, std::vector<int> table) {
  CheckReport r = validate_right_action(actor, carrier, table);
  if (!r.ok) throw ValidationFailed("right action: " + r.detail);
  return RightGroupAction{std::move(actor), std::move(carrier), std::move(table)};
}

RightGroupAction trivial_action(GroupPtr actor, GroupPtr carrier) {
  const int np = actor->order(), nm = carrier->order();
  std::vector<int> t(static_cast<size_t>(nm) * np);
  for (int m = 0; m < nm; ++m)
    for (int p = 0; p < np; ++p) t[static_cast<size_t>(m) * np + p] = m;
  return RightGroupAction{std::move(actor), std::move(carrier), std::move(t)};
}

RightGroupAction conjugation_action(GroupPtr g) {
  const int n = g->order();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int m = 0; m < n; ++m)
    for (int p = 0; p < n; ++p) t[static_cast<size_t>(m) * n + p] = g->conj(m, p);
  return RightGroupAction{g, g, std::move(t)};
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> cl = {g.identity()};
  std::vector<int> frontier = {g.identity()};
  for (int x : gens) {
    if (cl.insert(x).second) frontier.push_back(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(cl.begin(), cl.end());
    for (int a : cur)
      for (int b : cur)
        if (cl.insert(g.mul(a, b)).second) grew = true;
  }
  return {cl.begin(), cl.end()};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::set<int> s(subset.begin(), subset.end());
  if (!s.count(g.identity())) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(g.mul(a, b))) return false;
  for (int a : s)
    if (!s.count(g.inv(a))) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
  if (!is_subgroup(g, subset)) return false;
  std::set<int> s(subset.begin(), subset.end());
  for (int a : s)
    for (int p = 0; p < g.order(); ++p)
      if (!s.count(g.conj(a, p))) return false;
  return true;
}

QuotientGroup quotient_group(GroupPtr g, const std::vector<int>& normal_subset) {
  if (!is_subgroup(*g, normal_subset)) throw NotASubgroup("quotient: subset is not a subgroup");
  if (!is_normal_subgroup(*g, normal_subset)) throw NotNormal("quotient: subgroup is not normal");
  const int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : normal_subset) coset_of[g->mul(h, x)] = id;
  }
  // put the identity coset first so the quotient identity is index 0
  int eclass = coset_of[g->identity()];
  if (eclass != 0) {
    std::swap(reps[0], reps[eclass]);
    for (int& c : coset_of) {
      if (c == 0) c = eclass;
      else if (c == eclass) c = 0;
    }
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t[a][b] = coset_of[g->mul(reps[a], reps[b])];
  GroupPtr quot = make_group(std::move(t), g->label() + "/N");
  GroupMorphism proj{g, quot, coset_of};
  return QuotientGroup{quot, std::move(proj), std::move(reps)};
}

Subgroup subgroup_as_group(GroupPtr g, const std::vector<int>& subset) {
  if (!is_subgroup(*g, subset)) throw NotASubgroup("subset is not a subgroup");
  std::vector<int> elems(subset.begin(), subset.end());
  std::sort(elems.begin(), elems.end());
  std::vector<int> index_of(g->order(), -1);
  for (size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);
  const int k = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = index_of[g->mul(elems[a], elems[b])];
  GroupPtr sub = make_group(std::move(t), g->label() + "_sub");
  GroupMorphism emb{sub, g, elems};
  return Subgroup{sub, std::move(emb), elems, std::move(index_of)};
}

DirectProduct direct_product(GroupPtr a, GroupPtr b) {
  const int na = a->order(), nb = b->order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      t[x][y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
    }
  GroupPtr prod = make_group(std::move(t), a->label() + "x" + b->label());
  return DirectProduct{prod, std::move(a), std::move(b)};
}

std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> cl = {g.identity()};
  while (static_cast<int>(cl.size()) < g.order()) {
    // smallest element outside the closure so far
    std::set<int> have(cl.begin(), cl.end());
    int next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!have.count(x)) { next = x; break; }
    gens.push_back(next);
    cl = subgroup_closure(g, gens);
  }
  return gens;
}

namespace {

// Express every element as a product of generators: elem = word[i].prev * gen[word[i].g],
// BFS from the identity.  Returns {prev, gen index} per element, identity = {-1,-1}.
std::vector<std::pair<int, int>> expression_tree(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<std::pair<int, int>> expr(g.order(), {-2, -2});
  expr[g.identity()] = {-1, -1};
  std::vector<int> queue = {g.identity()};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = g.mul(x, gens[gi]);
      if (expr[y].first == -2) {
        expr[y] = {x, static_cast<int>(gi)};
        queue.push_back(y);
      }
    }
  }
  return expr;
}

// Enumerate maps determined by generator images; check the homomorphism
// property in full before accepting.
void enumerate_homs(const GroupPtr& src, const GroupPtr& tgt, bool bijective_only,
                    long long limit, std::vector<std::vector<int>>& out, bool first_only) {
  const auto gens = generating_sequence(*src);
  const auto expr = expression_tree(*src, gens);
  const int r = static_cast<int>(gens.size());
  long long space = 1;
  for (int i = 0; i < r; ++i) {
    space *= tgt->order();
    if (space > limit) throw BoundExceeded("homomorphism search space exceeds bound");
  }
  std::vector<int> img(r, 0);
  std::vector<int> gen_order(r);
  for (int i = 0; i < r; ++i) gen_order[i] = src->element_order(gens[i]);

  std::vector<int> choice(r, -1);
  // candidate images per generator, pruned by element order
  std::vector<std::vector<int>> cands(r);
  for (int i = 0; i < r; ++i)
    for (int y = 0; y < tgt->order(); ++y) {
      int oy = tgt->element_order(y);
      bool ok = bijective_only ? (oy == gen_order[i]) : (gen_order[i] % oy == 0);
      if (ok) cands[i].push_back(y);
    }

  std::vector<int> stack_pos(r, 0);
  std::vector<int> map(src->order());
  auto build_and_check = [&]() -> bool {
    for (int x = 0; x < src->order(); ++x) {
      if (expr[x].first == -1) map[x] = tgt->identity();
    }
    // BFS order guarantees prev is computed before x when walking element ids
    // in expression order; recompute via queue order instead:
    std::vector<int> order_fill;
    order_fill.reserve(src->order());
    std::vector<char> done(src->order(), 0);
    order_fill.push_back(src->identity());
    done[src->identity()] = 1;
    for (size_t qi = 0; qi < order_fill.size(); ++qi) {
      int x = order_fill[qi];
      for (int gi = 0; gi < r; ++gi) {
        int y = src->mul(x, gens[gi]);
        if (!done[y]) {
          done[y] = 1;
          map[y] = tgt->mul(map[x], img[gi]);
          order_fill.push_back(y);
        }
      }
    }
    for (int x = 0; x < src->order(); ++x)
      for (int y = 0; y < src->order(); ++y)
        if (map[src->mul(x, y)] != tgt->mul(map[x], map[y])) return false;
    if (bijective_only) {
      std::vector<char> seen(tgt->order(), 0);
      for (int v : map) {
        if (seen[v]) return false;
        seen[v] = 1;
      }
      if (src->order() != tgt->order()) return false;
    }
    return true;
  };

  // iterative product over candidate lists
  std::vector<size_t> pos(r, 0);
  if (r == 0) {
    if (build_and_check()) out.push_back(map);
    return;
  }
  while (true) {
    for (int i = 0; i < r; ++i) img[i] = cands[i].empty() ? -1 : cands[i][pos[i]];
    bool feasible = std::none_of(img.begin(), img.end(), [](int v) { return v < 0; });
    if (feasible && build_and_check()) {
      out.push_back(map);
      if (first_only) return;
    }
    int i = r - 1;
    while (i >= 0) {
      if (!cands[i].empty() && ++pos[i] < cands[i].size()) break;
      pos[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
}

}  // namespace

std::vector<std::vector<int>> all_homomorphisms(const GroupPtr& src, const GroupPtr& tgt,
                                                long long limit) {
  std::vector<std::vector<int>> out;
  enumerate_homs(src, tgt, false, limit, out, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const GroupPtr& src, const GroupPtr& tgt) {
  if (src->order() != tgt->order()) return std::nullopt;
  std::vector<std::vector<int>> out;
  enumerate_homs(src, tgt, true, 1000000000LL, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

AutomorphismGroup automorphism_group(const GroupPtr& g, int bound) {
  if (g->order() > bound) throw BoundExceeded("automorphism_group: order exceeds bound");
  std::vector<std::vector<int>> maps;
  enumerate_homs(g, g, true, 1000000000LL, maps, false);
  std::sort(maps.begin(), maps.end());
  const int n = static_cast<int>(maps.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[maps[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // left-to-right composite: apply maps[a], then maps[b]
      std::vector<int> c(g->order());
      for (int x = 0; x < g->order(); ++x) c[x] = maps[b][maps[a][x]];
      t[a][b] = index.at(c);
    }
  GroupPtr aut = make_group(std::move(t), "Aut(" + g->label() + ")");
  return AutomorphismGroup{aut, std::move(maps)};
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier = {{g.identity()}};
  found.insert({g.identity()});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& sub : frontier)
      for (int x = 0; x < g.order(); ++x) {
        std::vector<int> gens = sub;
        gens.push_back(x);
        auto cl = subgroup_closure(g, gens);
        if (found.insert(cl).second) next.push_back(cl);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace crossmod
