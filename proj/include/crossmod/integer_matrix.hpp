#ifndef CROSSMOD_INTEGER_MATRIX_HPP
#define CROSSMOD_INTEGER_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace crossmod {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix of exact (unbounded) integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[a] += c * row[b]
  void add_row(int a, int b, const Int& c);
  /// col[a] += c * col[b]
  void add_col(int a, int b, const Int& c);
  void negate_row(int a);
  void negate_col(int a);

  std::vector<Int> column(int j) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

/// U * A * V = S with U, V unimodular and S diagonal with the divisibility
/// chain d1 | d2 | ...; zeros trail.  Uinv accumulates the inverse of U so
/// that column lattices can be read off without a separate inversion.
struct SmithDecomposition {
  IntMatrix U, S, V, Uinv;
  std::vector<Int> divisors;  // full diagonal of S, length min(rows, cols)
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// One integer solution x of A x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b);

/// Basis of the integer kernel of A (columns of V beyond the rank).
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

/// Exact determinant (square matrices) by fraction-free elimination.
Int determinant(const IntMatrix& a);

}  // namespace crossmod

#endif
