#ifndef CROSSMOD_COHOMOLOGY_HPP
#define CROSSMOD_COHOMOLOGY_HPP

#include <memory>
#include <optional>
#include <vector>

#include "crossmod/crossed_module.hpp"
#include "crossmod/finite_group.hpp"
#include "crossmod/integer_matrix.hpp"

namespace crossmod {

/// Size limits for the cohomology solver and the enumeration oracle.
struct CohomologyBounds {
  int max_phi = 6;
  long max_module_size = 16;
  int max_degree = 3;
  int oracle_max_phi = 3;
};

/// A finite abelian right Phi-module: coefficients Z/d1 x ... x Z/dk with a
/// right action by integer matrices (row vectors act as a |-> a * T_g, so
/// T_{gh} = T_g T_h).  Elements are mixed-radix ranks of coordinate vectors.
class PhiModule {
 public:
  PhiModule(GroupPtr phi, std::vector<long> divisors, std::vector<std::vector<long>> matrices);

  const GroupPtr& phi() const { return phi_; }
  const std::vector<long>& divisors() const { return divisors_; }
  int dim() const { return static_cast<int>(divisors_.size()); }
  long size() const { return size_; }
  /// entry (i, j) of the action matrix of g
  long matrix(int g, int i, int j) const { return matrices_[g][static_cast<size_t>(i) * dim() + j]; }
  const std::vector<long>& matrix_row_major(int g) const { return matrices_[g]; }

  std::vector<long> coords(int element) const;
  int element(const std::vector<long>& coords) const;
  int add(int a, int b) const;
  int neg(int a) const;
  int zero() const { return 0; }
  /// a^g
  int act(int a, int g) const;

 private:
  GroupPtr phi_;
  std::vector<long> divisors_;
  std::vector<std::vector<long>> matrices_;
  long size_ = 1;
};

using ModulePtr = std::shared_ptr<const PhiModule>;
ModulePtr make_phi_module(GroupPtr phi, std::vector<long> divisors,
                          std::vector<std::vector<long>> matrices);
ModulePtr trivial_module(GroupPtr phi, std::vector<long> divisors);
/// The kernel module of a crossed module as a PhiModule over Q.
ModulePtr phi_module_from_kernel(const KernelModule& km, GroupPtr q);

/// A normalized inhomogeneous cochain: a full table Phi^n -> module elements
/// that vanishes whenever an argument is the identity.  Degree 0 is a single
/// module element.
struct Cochain {
  ModulePtr module;
  int degree = 0;
  std::vector<int> values;  // size |Phi|^degree, module element ranks

  long table_size() const { return static_cast<long>(values.size()); }
};

Cochain zero_cochain(ModulePtr module, int degree);
CheckReport validate_cochain(const Cochain& c);
bool cochains_equal(const Cochain& a, const Cochain& b);
Cochain add_cochains(const Cochain& a, const Cochain& b);
Cochain negate_cochain(const Cochain& a);

/// The inhomogeneous right-module differential
/// (df)(g1,...,g_{n+1}) = f(g2,...,g_{n+1})
///                        + sum_i (-1)^i f(g1,...,g_i g_{i+1},...,g_{n+1})
///                        + (-1)^{n+1} f(g1,...,g_n)^{g_{n+1}}.
/// Throws DegreeTooHigh for degree > 3 inputs.
Cochain coboundary(const Cochain& f);
bool is_cocycle(const Cochain& f);

/// H^n as elementary divisors with representative cocycles and an exact
/// decomposition procedure (class coordinates plus a certifying coboundary
/// witness).
class CohomologyGroup {
 public:
  struct Decomposition {
    std::vector<long> coords;  // one per divisor
    Cochain witness;           // d(witness) = z - sum coords_i * rep_i
  };

  int degree() const { return degree_; }
  const std::vector<long>& divisors() const { return divisors_; }
  const std::vector<Cochain>& representatives() const { return reps_; }
  long order() const;
  /// Throws NotACocycle when z is not a cocycle.
  Decomposition decompose(const Cochain& z) const;
  bool is_zero_class(const Cochain& z) const;
  /// The cocycle sum of coords_i * rep_i.
  Cochain combination(const std::vector<long>& coords) const;

 private:
  friend CohomologyGroup cohomology_group(const ModulePtr&, int, const CohomologyBounds&);
  ModulePtr module_;
  int degree_ = 0;
  std::vector<long> divisors_;
  std::vector<Cochain> reps_;
  // solver state for decompose
  IntMatrix zbasis_;        // columns form a basis of the cocycle lattice
  IntMatrix zbasis_coeff_;  // S'^{-1} U of the basis SNF, maps vectors to basis coords
  std::vector<Int> zbasis_div_;
  IntMatrix ux_;            // SNF row transform of the boundary-coordinate matrix
  std::vector<Int> x_divisors_;
  std::vector<int> kept_;   // indices of divisors > 1
  std::vector<std::vector<int>> tuples_;  // normalized tuples of degree n
};

CohomologyGroup cohomology_group(const ModulePtr& module, int degree,
                                 const CohomologyBounds& bounds = {});

/// A witness h with dh = z, or nullopt when z is not a coboundary.
/// Throws NotACocycle when dz != 0.
std::optional<Cochain> is_coboundary(const Cochain& z);

/// Exhaustive cocycle/coboundary counting (the independent oracle).
struct CohomologyCount {
  long cocycles = 0;
  long coboundaries = 0;
  long order = 0;
};
CohomologyCount enumerate_cohomology(const ModulePtr& module, int degree,
                                     const CohomologyBounds& bounds = {});

/// Restriction of a module over Q along theta : Phi' -> Q, and of cochains.
ModulePtr pullback_module(const GroupMorphism& theta, const ModulePtr& over_q);
Cochain pullback_cochain(const GroupMorphism& theta, const ModulePtr& pulled, const Cochain& z);

/// An equivariant homomorphism of Phi-modules over the same Phi.
struct ModuleMap {
  ModulePtr from, to;
  std::vector<int> map;  // element rank -> element rank
};
/// Verifies additivity and equivariance; throws NotEquivariant.
ModuleMap make_module_map(ModulePtr from, ModulePtr to, std::vector<int> map);
Cochain pushforward_cochain(const ModuleMap& f, const Cochain& z);

}  // namespace crossmod

#endif
