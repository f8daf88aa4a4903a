#ifndef CROSSMOD_ABELIAN_HPP
#define CROSSMOD_ABELIAN_HPP

#include <vector>

#include "crossmod/finite_group.hpp"

namespace crossmod {

/// Coordinates for a finite abelian group: an isomorphism with
/// Z/d1 x ... x Z/dk where d1 | d2 | ... and every di > 1.
struct AbelianStructure {
  std::vector<long> divisors;
  /// element index -> coordinate vector (length = divisors.size())
  std::vector<std::vector<long>> coords;
  /// mixed-radix rank of a coordinate vector -> element index
  std::vector<int> element_of_rank;

  long rank(const std::vector<long>& c) const;
  int element(const std::vector<long>& c) const { return element_of_rank[rank(c)]; }
  long size() const { return static_cast<long>(coords.size()); }
};

/// Computes elementary-divisor coordinates via the Smith normal form of the
/// full relation presentation.  Requires g abelian.
AbelianStructure abelian_structure(const FiniteGroup& g);

/// The group Z/d1 x ... x Z/dk as a multiplication table, elements ranked in
/// mixed radix (last coordinate fastest), identity 0.
GroupPtr group_from_divisors(const std::vector<long>& divisors);

}  // namespace crossmod

#endif
