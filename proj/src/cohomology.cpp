#include "crossmod/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace crossmod {

namespace {

long power_long(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Normalized tuple bookkeeping for one degree.
struct TupleSpace {
  int q = 0;
  int identity = 0;
  int degree = 0;
  std::vector<std::vector<int>> tuples;  // normalized tuples
  std::vector<int> norm_index;           // full rank -> normalized index or -1

  long full_size() const { return power_long(q, degree); }
};

TupleSpace tuple_space(const FiniteGroup& phi, int degree) {
  TupleSpace t;
  t.q = phi.order();
  t.identity = phi.identity();
  t.degree = degree;
  const long full = power_long(t.q, degree);
  t.norm_index.assign(full, -1);
  for (long r = 0; r < full; ++r) {
    std::vector<int> tup(degree);
    long rr = r;
    for (int i = degree - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(rr % t.q);
      rr /= t.q;
    }
    bool normalized = std::none_of(tup.begin(), tup.end(),
                                   [&](int g) { return g == t.identity; });
    if (normalized) {
      t.norm_index[r] = static_cast<int>(t.tuples.size());
      t.tuples.push_back(std::move(tup));
    }
  }
  return t;
}

long tuple_rank(const std::vector<int>& tup, int q) {
  long r = 0;
  for (int g : tup) r = r * q + g;
  return r;
}

/// The differential as an integer matrix on normalized coordinates.
IntMatrix differential_matrix(const PhiModule& mod, const TupleSpace& from, const TupleSpace& to) {
  const int k = mod.dim();
  IntMatrix d(static_cast<int>(to.tuples.size()) * k, static_cast<int>(from.tuples.size()) * k);
  const int n = from.degree;  // to.degree == n + 1
  for (size_t ti = 0; ti < to.tuples.size(); ++ti) {
    const auto& g = to.tuples[ti];
    auto add_plain = [&](const std::vector<int>& src, int sign) {
      bool normalized = std::none_of(src.begin(), src.end(),
                                     [&](int x) { return x == from.identity; });
      if (!normalized) return;
      int si = from.norm_index[tuple_rank(src, from.q)];
      for (int j = 0; j < k; ++j) d.at(static_cast<int>(ti) * k + j, si * k + j) += sign;
    };
    // f(g2, ..., g_{n+1})
    add_plain(std::vector<int>(g.begin() + 1, g.end()), 1);
    // sum (-1)^i f(g1, ..., g_i g_{i+1}, ..., g_{n+1})
    for (int i = 1; i <= n; ++i) {
      std::vector<int> src;
      src.reserve(n);
      for (int t = 0; t < i - 1; ++t) src.push_back(g[t]);
      src.push_back(mod.phi()->mul(g[i - 1], g[i]));
      for (int t = i + 1; t <= n; ++t) src.push_back(g[t]);
      add_plain(src, i % 2 == 0 ? 1 : -1);
    }
    // (-1)^{n+1} f(g1, ..., gn)^{g_{n+1}}
    std::vector<int> src(g.begin(), g.end() - 1);
    bool normalized = std::none_of(src.begin(), src.end(),
                                   [&](int x) { return x == from.identity; });
    if (normalized) {
      int si = from.norm_index[tuple_rank(src, from.q)];
      int sign = (n + 1) % 2 == 0 ? 1 : -1;
      int last = g.back();
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
          d.at(static_cast<int>(ti) * k + i, si * k + j) += sign * mod.matrix(last, j, i);
    }
  }
  return d;
}

/// diag of coordinate moduli for one degree.
IntMatrix moduli_matrix(const PhiModule& mod, const TupleSpace& space) {
  const int k = mod.dim();
  const int n = static_cast<int>(space.tuples.size()) * k;
  IntMatrix m(n, n);
  for (int t = 0; t < static_cast<int>(space.tuples.size()); ++t)
    for (int j = 0; j < k; ++j) m.at(t * k + j, t * k + j) = mod.divisors()[j];
  return m;
}

/// Cochain -> integer vector of normalized coordinates.
std::vector<Int> cochain_to_vector(const Cochain& c, const TupleSpace& space) {
  const auto& mod = *c.module;
  const int k = mod.dim();
  std::vector<Int> v(space.tuples.size() * k);
  for (size_t t = 0; t < space.tuples.size(); ++t) {
    auto coords = mod.coords(c.values[tuple_rank(space.tuples[t], space.q)]);
    for (int j = 0; j < k; ++j) v[t * k + j] = coords[j];
  }
  return v;
}

/// Integer vector of normalized coordinates -> cochain (reduced mod moduli).
Cochain vector_to_cochain(const ModulePtr& module, int degree, const TupleSpace& space,
                          const std::vector<Int>& v) {
  Cochain c = zero_cochain(module, degree);
  const int k = module->dim();
  for (size_t t = 0; t < space.tuples.size(); ++t) {
    std::vector<long> coords(k);
    for (int j = 0; j < k; ++j) {
      long d = module->divisors()[j];
      Int r = v[t * k + j] % d;
      if (r < 0) r += d;
      coords[j] = static_cast<long>(r);
    }
    c.values[tuple_rank(space.tuples[t], space.q)] = module->element(coords);
  }
  return c;
}

void check_bounds(const PhiModule& mod, int degree, const CohomologyBounds& b) {
  if (degree < 1 || degree > b.max_degree)
    throw BoundExceeded("cohomology: degree outside 1.." + std::to_string(b.max_degree));
  if (mod.phi()->order() > b.max_phi)
    throw BoundExceeded("cohomology: |Phi| exceeds the configured bound");
  if (mod.size() > b.max_module_size)
    throw BoundExceeded("cohomology: |A| exceeds the configured bound");
}

}  // namespace

PhiModule::PhiModule(GroupPtr phi, std::vector<long> divisors,
                     std::vector<std::vector<long>> matrices)
    : phi_(std::move(phi)), divisors_(std::move(divisors)), matrices_(std::move(matrices)) {
  for (size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i] < 2) throw ValidationFailed("module divisors must be at least 2");
    if (i + 1 < divisors_.size() && divisors_[i + 1] % divisors_[i] != 0)
      throw ValidationFailed("module divisors must form a divisibility chain");
  }
  for (long d : divisors_) size_ *= d;
  const int k = dim();
  if (static_cast<int>(matrices_.size()) != phi_->order())
    throw ValidationFailed("one action matrix per group element required");
  for (const auto& m : matrices_)
    if (static_cast<int>(m.size()) != k * k)
      throw ValidationFailed("action matrix has wrong dimensions");
  // well-defined on the quotient: d_j * T[j][i] = 0 mod d_i
  for (int g = 0; g < phi_->order(); ++g)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i)
        if ((divisors_[j] * matrix(g, j, i)) % divisors_[i] != 0)
          throw ValidationFailed("action matrix does not preserve the coefficient lattice");
  // identity, composition, invertibility as maps on elements
  for (int a = 0; a < size_; ++a)
    if (act(a, phi_->identity()) != a)
      throw ValidationFailed("action of the identity is not the identity");
  for (int g = 0; g < phi_->order(); ++g)
    for (int h = 0; h < phi_->order(); ++h)
      for (int a = 0; a < size_; ++a)
        if (act(act(a, g), h) != act(a, phi_->mul(g, h)))
          throw ValidationFailed("action is not multiplicative (right order)");
  for (int g = 0; g < phi_->order(); ++g) {
    std::vector<char> seen(size_, 0);
    for (int a = 0; a < size_; ++a) {
      int v = act(a, g);
      if (seen[v]) throw ValidationFailed("action matrix is not invertible in the quotient");
      seen[v] = 1;
    }
  }
}

std::vector<long> PhiModule::coords(int element) const {
  std::vector<long> c(dim());
  long r = element;
  for (int i = dim() - 1; i >= 0; --i) {
    c[i] = r % divisors_[i];
    r /= divisors_[i];
  }
  return c;
}

int PhiModule::element(const std::vector<long>& coords) const {
  long r = 0;
  for (int i = 0; i < dim(); ++i) {
    long v = ((coords[i] % divisors_[i]) + divisors_[i]) % divisors_[i];
    r = r * divisors_[i] + v;
  }
  return static_cast<int>(r);
}

int PhiModule::add(int a, int b) const {
  auto ca = coords(a), cb = coords(b);
  for (int i = 0; i < dim(); ++i) ca[i] = (ca[i] + cb[i]) % divisors_[i];
  return element(ca);
}

int PhiModule::neg(int a) const {
  auto c = coords(a);
  for (int i = 0; i < dim(); ++i) c[i] = (divisors_[i] - c[i]) % divisors_[i];
  return element(c);
}

int PhiModule::act(int a, int g) const {
  auto c = coords(a);
  std::vector<long> out(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    long acc = 0;
    for (int j = 0; j < dim(); ++j) acc += c[j] * matrix(g, j, i);
    out[i] = ((acc % divisors_[i]) + divisors_[i]) % divisors_[i];
  }
  return element(out);
}

ModulePtr make_phi_module(GroupPtr phi, std::vector<long> divisors,
                          std::vector<std::vector<long>> matrices) {
  return std::make_shared<const PhiModule>(std::move(phi), std::move(divisors),
                                           std::move(matrices));
}

ModulePtr trivial_module(GroupPtr phi, std::vector<long> divisors) {
  const int k = static_cast<int>(divisors.size());
  std::vector<long> id(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) id[static_cast<size_t>(i) * k + i] = 1;
  std::vector<std::vector<long>> ms(phi->order(), id);
  return make_phi_module(std::move(phi), std::move(divisors), std::move(ms));
}

ModulePtr phi_module_from_kernel(const KernelModule& km, GroupPtr q) {
  const auto& st = km.structure;
  const int k = static_cast<int>(st.divisors.size());
  std::vector<std::vector<long>> ms(q->order(), std::vector<long>(static_cast<size_t>(k) * k, 0));
  for (int g = 0; g < q->order(); ++g) {
    for (int j = 0; j < k; ++j) {
      // image of the j-th basis vector under the action of g
      std::vector<long> e(k, 0);
      e[j] = 1;
      int elem = st.element(e);
      int image = km.q_action[g][elem];
      auto c = st.coords[image];
      for (int i = 0; i < k; ++i) ms[g][static_cast<size_t>(j) * k + i] = c[i];
    }
  }
  auto mod = make_phi_module(q, st.divisors, std::move(ms));
  // the matrix action must reproduce the kernel action element-wise
  for (int g = 0; g < q->order(); ++g)
    for (int a = 0; a < km.A->order(); ++a) {
      int rank = static_cast<int>(st.rank(st.coords[a]));
      int expect = static_cast<int>(st.rank(st.coords[km.q_action[g][a]]));
      if (mod->act(rank, g) != expect)
        throw ValidationFailed("kernel module: matrix action disagrees with the group action");
    }
  return mod;
}

Cochain zero_cochain(ModulePtr module, int degree) {
  Cochain c;
  c.degree = degree;
  long n = power_long(module->phi()->order(), degree);
  c.module = std::move(module);
  c.values.assign(n, 0);
  return c;
}

CheckReport validate_cochain(const Cochain& c) {
  const auto& mod = *c.module;
  const int q = mod.phi()->order();
  if (c.degree < 0 || c.degree > 4) return CheckReport::fail("degree outside 0..4");
  if (c.table_size() != power_long(q, c.degree))
    return CheckReport::fail("value table has wrong size");
  for (int v : c.values)
    if (v < 0 || v >= mod.size()) return CheckReport::fail("value out of range");
  const int e = mod.phi()->identity();
  for (long r = 0; r < c.table_size(); ++r) {
    long rr = r;
    bool has_identity = false;
    for (int i = 0; i < c.degree; ++i) {
      if (rr % q == e) has_identity = true;
      rr /= q;
    }
    if (has_identity && c.values[r] != 0)
      return CheckReport::fail("not normalized: nonzero value on an identity argument");
  }
  return CheckReport::pass();
}

bool cochains_equal(const Cochain& a, const Cochain& b) {
  return a.degree == b.degree && a.values == b.values;
}

Cochain add_cochains(const Cochain& a, const Cochain& b) {
  Cochain c = a;
  for (size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.module->add(a.values[i], b.values[i]);
  return c;
}

Cochain negate_cochain(const Cochain& a) {
  Cochain c = a;
  for (auto& v : c.values) v = a.module->neg(v);
  return c;
}

Cochain coboundary(const Cochain& f) {
  if (f.degree > 3) throw DegreeTooHigh("coboundary only computed for degrees up to 3");
  const auto& mod = *f.module;
  const int q = mod.phi()->order();
  const int n = f.degree;
  Cochain out = zero_cochain(f.module, n + 1);
  std::vector<int> g(n + 1);
  for (long r = 0; r < out.table_size(); ++r) {
    long rr = r;
    for (int i = n; i >= 0; --i) {
      g[i] = static_cast<int>(rr % q);
      rr /= q;
    }
    auto value_at = [&](const std::vector<int>& tup) { return f.values[tuple_rank(tup, q)]; };
    int acc = value_at(std::vector<int>(g.begin() + 1, g.end()));
    for (int i = 1; i <= n; ++i) {
      std::vector<int> src;
      src.reserve(n);
      for (int t = 0; t < i - 1; ++t) src.push_back(g[t]);
      src.push_back(mod.phi()->mul(g[i - 1], g[i]));
      for (int t = i + 1; t <= n; ++t) src.push_back(g[t]);
      int v = value_at(src);
      acc = mod.add(acc, i % 2 == 0 ? v : mod.neg(v));
    }
    int last = mod.act(value_at(std::vector<int>(g.begin(), g.end() - 1)), g.back());
    acc = mod.add(acc, (n + 1) % 2 == 0 ? last : mod.neg(last));
    out.values[r] = acc;
  }
  return out;
}

bool is_cocycle(const Cochain& f) {
  Cochain d = coboundary(f);
  return std::all_of(d.values.begin(), d.values.end(), [](int v) { return v == 0; });
}

long CohomologyGroup::order() const {
  long o = 1;
  for (long d : divisors_) o *= d;
  return o;
}

Cochain CohomologyGroup::combination(const std::vector<long>& coords) const {
  Cochain acc = zero_cochain(module_, degree_);
  for (size_t i = 0; i < divisors_.size(); ++i) {
    long c = ((coords[i] % divisors_[i]) + divisors_[i]) % divisors_[i];
    for (long t = 0; t < c; ++t) acc = add_cochains(acc, reps_[i]);
  }
  return acc;
}

CohomologyGroup::Decomposition CohomologyGroup::decompose(const Cochain& z) const {
  if (z.degree != degree_) throw NotACocycle("decompose: wrong degree");
  if (!is_cocycle(z)) throw NotACocycle("decompose: input is not a cocycle");
  const int k = module_->dim();
  Decomposition out;
  out.coords.assign(divisors_.size(), 0);
  if (k == 0 || tuples_.empty()) {
    out.witness = zero_cochain(module_, degree_ - 1);
    return out;
  }
  TupleSpace space;
  space.q = module_->phi()->order();
  space.identity = module_->phi()->identity();
  space.degree = degree_;
  space.tuples = tuples_;
  std::vector<Int> v = cochain_to_vector(z, space);
  const int nn = static_cast<int>(v.size());
  // coordinates in the cocycle-lattice basis
  std::vector<Int> x(nn);
  for (int i = 0; i < nn; ++i) {
    Int acc = 0;
    for (int j = 0; j < nn; ++j) acc += zbasis_coeff_.at(i, j) * v[j];
    if (acc % zbasis_div_[i] != 0)
      throw NotACocycle("decompose: vector is not in the cocycle lattice");
    x[i] = acc / zbasis_div_[i];
  }
  std::vector<Int> c(nn);
  for (int i = 0; i < nn; ++i) {
    Int acc = 0;
    for (int j = 0; j < nn; ++j) acc += ux_.at(i, j) * x[j];
    c[i] = acc;
  }
  for (size_t i = 0; i < kept_.size(); ++i) {
    Int m = c[kept_[i]] % x_divisors_[kept_[i]];
    if (m < 0) m += x_divisors_[kept_[i]];
    out.coords[i] = static_cast<long>(m);
  }
  // witness: z - sum coords_i rep_i is a coboundary
  Cochain rest = z;
  for (size_t i = 0; i < kept_.size(); ++i)
    for (long t = 0; t < out.coords[i]; ++t) rest = add_cochains(rest, negate_cochain(reps_[i]));
  auto w = is_coboundary(rest);
  if (!w.has_value()) throw NotACocycle("decompose: residual class is not a coboundary");
  out.witness = std::move(*w);
  return out;
}

bool CohomologyGroup::is_zero_class(const Cochain& z) const {
  auto d = decompose(z);
  return std::all_of(d.coords.begin(), d.coords.end(), [](long c) { return c == 0; });
}

CohomologyGroup cohomology_group(const ModulePtr& module, int degree,
                                 const CohomologyBounds& bounds) {
  check_bounds(*module, degree, bounds);
  CohomologyGroup h;
  h.module_ = module;
  h.degree_ = degree;
  const int k = module->dim();
  auto sp_n = tuple_space(*module->phi(), degree);
  h.tuples_ = sp_n.tuples;
  if (k == 0 || sp_n.tuples.empty()) return h;

  auto sp_up = tuple_space(*module->phi(), degree + 1);
  auto sp_dn = tuple_space(*module->phi(), degree - 1);
  IntMatrix d_n = differential_matrix(*module, sp_n, sp_up);
  IntMatrix d_dn = differential_matrix(*module, sp_dn, sp_n);
  IntMatrix mod_n = moduli_matrix(*module, sp_n);
  IntMatrix mod_up = moduli_matrix(*module, sp_up);

  const int nn = d_n.cols();
  // cocycle lattice: projections of ker [D_n | Mod_{n+1}] plus the moduli
  IntMatrix stacked(d_n.rows(), nn + mod_up.cols());
  for (int i = 0; i < d_n.rows(); ++i) {
    for (int j = 0; j < nn; ++j) stacked.at(i, j) = d_n.at(i, j);
    for (int j = 0; j < mod_up.cols(); ++j) stacked.at(i, nn + j) = mod_up.at(i, j);
  }
  auto kernel = integer_kernel(stacked);
  IntMatrix zsp(nn, static_cast<int>(kernel.size()) + nn);
  for (size_t c = 0; c < kernel.size(); ++c)
    for (int i = 0; i < nn; ++i) zsp.at(i, static_cast<int>(c)) = kernel[c][i];
  for (int i = 0; i < nn; ++i) zsp.at(i, static_cast<int>(kernel.size()) + i) = mod_n.at(i, i);

  auto zdec = smith_normal_form(zsp);
  for (int i = 0; i < nn; ++i)
    if (zdec.divisors[i] == 0)
      throw ValidationFailed("cohomology: cocycle lattice is not full rank");
  // basis: columns s_i * Uinv e_i;   coords of w: (U w)_i / s_i
  h.zbasis_ = IntMatrix(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) h.zbasis_.at(i, j) = zdec.Uinv.at(i, j) * zdec.divisors[j];
  h.zbasis_coeff_ = zdec.U;
  h.zbasis_div_.assign(zdec.divisors.begin(), zdec.divisors.begin() + nn);

  // boundary generators in basis coordinates
  const int nb = d_dn.cols() + nn;
  IntMatrix x(nn, nb);
  auto coords_of = [&](const std::vector<Int>& w, int col) {
    for (int i = 0; i < nn; ++i) {
      Int acc = 0;
      for (int j = 0; j < nn; ++j) acc += zdec.U.at(i, j) * w[j];
      if (acc % zdec.divisors[i] != 0)
        throw ValidationFailed("cohomology: boundary outside the cocycle lattice");
      x.at(i, col) = acc / zdec.divisors[i];
    }
  };
  for (int c = 0; c < d_dn.cols(); ++c) coords_of(d_dn.column(c), c);
  for (int c = 0; c < nn; ++c) coords_of(mod_n.column(c), d_dn.cols() + c);

  auto xdec = smith_normal_form(x);
  h.ux_ = xdec.U;
  h.x_divisors_.assign(xdec.divisors.begin(), xdec.divisors.begin() + nn);
  for (int i = 0; i < nn; ++i)
    if (h.x_divisors_[i] == 0)
      throw ValidationFailed("cohomology: quotient is not finite");
  for (int i = 0; i < nn; ++i)
    if (h.x_divisors_[i] > 1) h.kept_.push_back(i);
  for (int i : h.kept_) h.divisors_.push_back(static_cast<long>(h.x_divisors_[i]));

  // representatives: zbasis * Uinv_X e_i
  for (int i : h.kept_) {
    std::vector<Int> y(nn), v(nn);
    for (int r = 0; r < nn; ++r) y[r] = xdec.Uinv.at(r, i);
    for (int r = 0; r < nn; ++r) {
      Int acc = 0;
      for (int j = 0; j < nn; ++j) acc += h.zbasis_.at(r, j) * y[j];
      v[r] = acc;
    }
    Cochain rep = vector_to_cochain(module, degree, sp_n, v);
    if (!is_cocycle(rep)) throw ValidationFailed("cohomology: representative is not a cocycle");
    h.reps_.push_back(std::move(rep));
  }
  return h;
}

std::optional<Cochain> is_coboundary(const Cochain& z) {
  if (z.degree < 1) throw DegreeTooHigh("is_coboundary needs degree at least 1");
  if (!is_cocycle(z)) throw NotACocycle("is_coboundary: input is not a cocycle");
  const auto& module = z.module;
  const int k = module->dim();
  auto sp_n = tuple_space(*module->phi(), z.degree);
  if (k == 0 || sp_n.tuples.empty()) return zero_cochain(module, z.degree - 1);
  auto sp_dn = tuple_space(*module->phi(), z.degree - 1);
  IntMatrix d_dn = differential_matrix(*module, sp_dn, sp_n);
  IntMatrix mod_n = moduli_matrix(*module, sp_n);
  IntMatrix a(d_dn.rows(), d_dn.cols() + mod_n.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < d_dn.cols(); ++j) a.at(i, j) = d_dn.at(i, j);
    for (int j = 0; j < mod_n.cols(); ++j) a.at(i, d_dn.cols() + j) = mod_n.at(i, j);
  }
  auto sol = solve_linear(a, cochain_to_vector(z, sp_n));
  if (!sol.has_value()) return std::nullopt;
  std::vector<Int> hv(sol->begin(), sol->begin() + d_dn.cols());
  Cochain hc = vector_to_cochain(module, z.degree - 1, sp_dn, hv);
  Cochain check = coboundary(hc);
  if (!cochains_equal(check, z))
    throw ValidationFailed("is_coboundary: witness verification failed");
  return hc;
}

CohomologyCount enumerate_cohomology(const ModulePtr& module, int degree,
                                     const CohomologyBounds& bounds) {
  if (module->phi()->order() > bounds.oracle_max_phi)
    throw BoundExceeded("enumeration oracle: |Phi| exceeds the oracle bound");
  if (degree < 1 || degree > bounds.max_degree)
    throw BoundExceeded("enumeration oracle: degree out of range");
  const long asize = module->size();
  auto sp_n = tuple_space(*module->phi(), degree);
  auto sp_dn = tuple_space(*module->phi(), degree - 1);
  const long npos = static_cast<long>(sp_n.tuples.size());
  const long dpos = static_cast<long>(sp_dn.tuples.size());
  double total = 1;
  for (long i = 0; i < npos; ++i) total *= static_cast<double>(asize);
  if (total > 4e6) throw BoundExceeded("enumeration oracle: cochain space too large");

  CohomologyCount out;
  // count cocycles
  std::vector<int> assign(npos, 0);
  const int q = module->phi()->order();
  auto build = [&](const std::vector<int>& as, const TupleSpace& sp, int deg) {
    Cochain c = zero_cochain(module, deg);
    for (size_t t = 0; t < sp.tuples.size(); ++t)
      c.values[tuple_rank(sp.tuples[t], q)] = as[t];
    return c;
  };
  bool done = npos == 0;
  if (npos == 0) out.cocycles = 1;
  while (!done) {
    if (is_cocycle(build(assign, sp_n, degree))) ++out.cocycles;
    int i = static_cast<int>(npos) - 1;
    while (i >= 0 && assign[i] == asize - 1) assign[i--] = 0;
    if (i < 0) done = true;
    else ++assign[i];
  }
  // count distinct coboundaries
  std::set<std::vector<int>> images;
  std::vector<int> dassign(dpos, 0);
  done = false;
  while (!done) {
    Cochain h = build(dassign, sp_dn, degree - 1);
    images.insert(coboundary(h).values);
    int i = static_cast<int>(dpos) - 1;
    while (i >= 0 && dassign[i] == asize - 1) dassign[i--] = 0;
    if (i < 0) done = true;
    else ++dassign[i];
  }
  out.coboundaries = static_cast<long>(images.size());
  out.order = out.cocycles / out.coboundaries;
  if (out.order * out.coboundaries != out.cocycles)
    throw ValidationFailed("enumeration oracle: boundary count does not divide cocycle count");
  return out;
}

ModulePtr pullback_module(const GroupMorphism& theta, const ModulePtr& over_q) {
  if (theta.target.get() != over_q->phi().get())
    throw ValidationFailed("pullback: theta does not land in the module group");
  std::vector<std::vector<long>> ms(theta.source->order());
  for (int g = 0; g < theta.source->order(); ++g)
    ms[g] = over_q->matrix_row_major(theta.map[g]);
  return make_phi_module(theta.source, over_q->divisors(), std::move(ms));
}

Cochain pullback_cochain(const GroupMorphism& theta, const ModulePtr& pulled, const Cochain& z) {
  Cochain out = zero_cochain(pulled, z.degree);
  const int q = theta.source->order();
  const int qq = theta.target->order();
  for (long r = 0; r < out.table_size(); ++r) {
    long rr = r, ri = 0;
    std::vector<int> tup(z.degree);
    for (int i = z.degree - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(rr % q);
      rr /= q;
    }
    for (int i = 0; i < z.degree; ++i) ri = ri * qq + theta.map[tup[i]];
    out.values[r] = z.values[ri];
  }
  return out;
}

ModuleMap make_module_map(ModulePtr from, ModulePtr to, std::vector<int> map) {
  if (from->phi().get() != to->phi().get())
    throw NotEquivariant("module map: modules are over different groups");
  if (static_cast<long>(map.size()) != from->size())
    throw NotEquivariant("module map: map is not total");
  if (map[0] != 0) throw NotEquivariant("module map: zero is not preserved");
  for (int a = 0; a < from->size(); ++a)
    for (int b = 0; b < from->size(); ++b)
      if (map[from->add(a, b)] != to->add(map[a], map[b]))
        throw NotEquivariant("module map: not additive");
  for (int a = 0; a < from->size(); ++a)
    for (int g = 0; g < from->phi()->order(); ++g)
      if (map[from->act(a, g)] != to->act(map[a], g))
        throw NotEquivariant("module map: not equivariant");
  return ModuleMap{std::move(from), std::move(to), std::move(map)};
}

Cochain pushforward_cochain(const ModuleMap& f, const Cochain& z) {
  Cochain out = zero_cochain(f.to, z.degree);
  for (size_t i = 0; i < z.values.size(); ++i) out.values[i] = f.map[z.values[i]];
  return out;
}

}  // namespace crossmod
