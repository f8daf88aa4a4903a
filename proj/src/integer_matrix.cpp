#include "crossmod/integer_matrix.hpp"

#include <algorithm>
#include <cassert>

namespace crossmod {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(int a, int b, const Int& c) {
  if (c == 0) return;
  for (int j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col(int a, int b, const Int& c) {
  if (c == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMatrix::negate_row(int a) {
  for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(int a) {
  for (int i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

std::vector<Int> IntMatrix::column(int j) const {
  std::vector<Int> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  SmithDecomposition d;
  d.S = a;
  d.U = IntMatrix::identity(m);
  d.Uinv = IntMatrix::identity(m);
  d.V = IntMatrix::identity(n);
  IntMatrix& S = d.S;
  IntMatrix& U = d.U;
  IntMatrix& Ui = d.Uinv;
  IntMatrix& V = d.V;

  // Row op on S is mirrored on U (left factor) and inverted on Uinv from the
  // right; column ops go to V.
  auto row_swap = [&](int x, int y) {
    S.swap_rows(x, y);
    U.swap_rows(x, y);
    Ui.swap_cols(x, y);
  };
  auto col_swap = [&](int x, int y) {
    S.swap_cols(x, y);
    V.swap_cols(x, y);
  };
  auto row_add = [&](int x, int y, const Int& c) {
    S.add_row(x, y, c);
    U.add_row(x, y, c);
    Ui.add_col(y, x, -c);
  };
  auto col_add = [&](int x, int y, const Int& c) {
    S.add_col(x, y, c);
    V.add_col(x, y, c);
  };
  auto row_negate = [&](int x) {
    S.negate_row(x);
    U.negate_row(x);
    Ui.negate_col(x);
  };

  const int k = std::min(m, n);
  for (int t = 0; t < k; ++t) {
    // find pivot: smallest nonzero absolute value in S[t.., t..]
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (S.at(i, j) == 0) continue;
        Int v = abs_int(S.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column t below the pivot by Euclidean steps
      for (int i = t + 1; i < m; ++i) {
        if (S.at(i, t) == 0) continue;
        Int q = S.at(i, t) / S.at(t, t);
        row_add(i, t, -q);
        if (S.at(i, t) != 0) {
          row_swap(t, i);  // smaller remainder becomes the pivot
          clean = false;
        }
      }
      // clear row t
      for (int j = t + 1; j < n; ++j) {
        if (S.at(t, j) == 0) continue;
        Int q = S.at(t, j) / S.at(t, t);
        col_add(j, t, -q);
        if (S.at(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      for (int i = t + 1; i < m && clean; ++i)
        for (int j = t + 1; j < n && clean; ++j)
          if (S.at(i, j) % S.at(t, t) != 0) {
            row_add(t, i, 1);
            clean = false;
          }
    }
    if (S.at(t, t) < 0) row_negate(t);
  }

  d.divisors.resize(k);
  for (int t = 0; t < k; ++t) d.divisors[t] = S.at(t, t);
  return d;
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  SmithDecomposition d = smith_normal_form(a);
  const int m = a.rows(), n = a.cols();
  const int k = std::min(m, n);
  // S y = U b, x = V y
  std::vector<Int> ub(m);
  for (int i = 0; i < m; ++i) {
    Int acc = 0;
    for (int j = 0; j < m; ++j) acc += d.U.at(i, j) * b[j];
    ub[i] = acc;
  }
  std::vector<Int> y(n, 0);
  for (int i = 0; i < m; ++i) {
    const Int s = i < k ? d.divisors[i] : Int(0);
    if (s == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % s != 0) return std::nullopt;
      y[i] = ub[i] / s;
    }
  }
  std::vector<Int> x(n, 0);
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j) acc += d.V.at(i, j) * y[j];
    x[i] = acc;
  }
  return x;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  const int n = a.cols();
  const int k = std::min(a.rows(), n);
  int rank = 0;
  for (int t = 0; t < k; ++t)
    if (d.divisors[t] != 0) ++rank;
  std::vector<std::vector<Int>> basis;
  for (int j = rank; j < n; ++j) basis.push_back(d.V.column(j));
  return basis;
}

Int determinant(const IntMatrix& a) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  IntMatrix w = a;
  Int prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (w.at(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (w.at(i, t) != 0) { p = i; break; }
      if (p < 0) return 0;
      w.swap_rows(t, p);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(t, t) - w.at(i, t) * w.at(t, j)) / prev;
    prev = w.at(t, t);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

}  // namespace crossmod
