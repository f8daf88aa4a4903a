#include "crossmod/integer_matrix.hpp"

#include <random>

#include "doctest.h"

using namespace crossmod;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_decomposition(const IntMatrix& a) {
  auto d = smith_normal_form(a);
  CHECK(d.U * a * d.V == d.S);
  CHECK(d.U * d.Uinv == IntMatrix::identity(a.rows()));
  Int du = determinant(d.U), dv = determinant(d.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // diagonal, non-negative, divisibility chain, zeros trailing
  for (int i = 0; i < d.S.rows(); ++i)
    for (int j = 0; j < d.S.cols(); ++j)
      if (i != j) CHECK(d.S.at(i, j) == 0);
  for (size_t t = 0; t + 1 < d.divisors.size(); ++t) {
    CHECK(d.divisors[t] >= 0);
    if (d.divisors[t + 1] != 0) {
      CHECK(d.divisors[t] != 0);
      CHECK(d.divisors[t + 1] % d.divisors[t] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  auto id3 = IntMatrix::identity(3);
  auto d = smith_normal_form(id3);
  CHECK(d.divisors == std::vector<Int>{1, 1, 1});
  check_decomposition(id3);

  auto diag23 = from_rows({{2, 0}, {0, 3}});
  d = smith_normal_form(diag23);
  CHECK(d.divisors == std::vector<Int>{1, 6});
  check_decomposition(diag23);

  auto rank1 = from_rows({{2, 4}, {4, 8}});
  d = smith_normal_form(rank1);
  CHECK(d.divisors == std::vector<Int>{2, 0});
  check_decomposition(rank1);
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  for (int it = 0; it < 60; ++it) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) = val(rng);
    check_decomposition(a);
  }
}

TEST_CASE("linear solve and kernel") {
  auto a = from_rows({{2, 0}, {0, 3}});
  auto x = solve_linear(a, {4, 9});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve_linear(a, {1, 0}).has_value());

  auto k = integer_kernel(from_rows({{1, 2, 3}}));
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK(integer_kernel(IntMatrix::identity(3)).empty());
}

TEST_CASE("determinant is exact") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  auto a = from_rows({{3, 1}, {4, 2}});
  CHECK(determinant(a) == 2);
  auto s = from_rows({{0, 1}, {1, 0}});
  CHECK(determinant(s) == -1);
}
