#include "crossmod/abelian.hpp"

#include <cassert>

#include "crossmod/integer_matrix.hpp"

namespace crossmod {

long AbelianStructure::rank(const std::vector<long>& c) const {
  assert(c.size() == divisors.size());
  long r = 0;
  for (size_t i = 0; i < divisors.size(); ++i) {
    long v = ((c[i] % divisors[i]) + divisors[i]) % divisors[i];
    r = r * divisors[i] + v;
  }
  return r;
}

AbelianStructure abelian_structure(const FiniteGroup& g) {
  if (!g.is_abelian()) throw HypothesisViolated("abelian_structure: group is not abelian");
  const int n = g.order();
  // Presentation with all elements as generators and one relation per pair:
  // g_a + g_b - g_{ab} = 0.  The group is the cokernel of the relation matrix.
  IntMatrix rel(n, n * n);
  int col = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      rel.at(a, col) += 1;
      rel.at(b, col) += 1;
      rel.at(g.mul(a, b), col) -= 1;
      ++col;
    }
  auto d = smith_normal_form(rel);
  // coker(rel) = Z^n / im = sum of Z/s_i via x -> U x; s_i = 0 cannot occur
  // for a finite group's full presentation.
  std::vector<int> kept;
  std::vector<long> divisors;
  for (int i = 0; i < n; ++i) {
    Int s = i < static_cast<int>(d.divisors.size()) ? d.divisors[i] : Int(0);
    assert(s != 0);
    if (s > 1) {
      kept.push_back(i);
      divisors.push_back(static_cast<long>(s));
    }
  }
  AbelianStructure out;
  out.divisors = divisors;
  out.coords.resize(n);
  long total = 1;
  for (long dv : divisors) total *= dv;
  assert(total == n);
  out.element_of_rank.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    std::vector<long> c(kept.size());
    for (size_t i = 0; i < kept.size(); ++i) {
      Int v = d.U.at(kept[i], x);
      long dv = divisors[i];
      long m = static_cast<long>(((v % dv) + dv) % dv);
      c[i] = m;
    }
    out.coords[x] = c;
    out.element_of_rank[out.rank(c)] = x;
  }
  for (int v : out.element_of_rank) assert(v >= 0);
  return out;
}

GroupPtr group_from_divisors(const std::vector<long>& divisors) {
  long n = 1;
  for (long d : divisors) n *= d;
  const int k = static_cast<int>(divisors.size());
  auto unrank = [&](long r) {
    std::vector<long> c(k);
    for (int i = k - 1; i >= 0; --i) {
      c[i] = r % divisors[i];
      r /= divisors[i];
    }
    return c;
  };
  auto rank = [&](const std::vector<long>& c) {
    long r = 0;
    for (int i = 0; i < k; ++i) r = r * divisors[i] + (c[i] % divisors[i]);
    return r;
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      auto ca = unrank(a), cb = unrank(b);
      std::vector<long> c(k);
      for (int i = 0; i < k; ++i) c[i] = (ca[i] + cb[i]) % divisors[i];
      t[a][b] = static_cast<int>(rank(c));
    }
  std::string label = "Z";
  for (long d : divisors) label += "/" + std::to_string(d);
  if (divisors.empty()) label = "1";
  return make_group(std::move(t), std::move(label));
}

}  // namespace crossmod
