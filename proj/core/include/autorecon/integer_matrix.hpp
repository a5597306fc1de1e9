#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include <gmpxx.h>

namespace autorecon {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void append_row(const IntVector& row);

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  Integer determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  IntVector diagonal() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: the nonzero rows of the result span the
/// same lattice as the rows of `a`, are upper-echelon with positive pivots,
/// and entries above each pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Any integer row vector y with y * A = b, or nullopt.
std::optional<IntVector> solve_left(const IntMatrix& a, const IntVector& b);

/// Basis (as rows) of the integer left kernel {y : y * A = 0}.
IntMatrix left_kernel(const IntMatrix& a);

/// Floor division and rounding helpers on big integers.
Integer floor_div(const Integer& a, const Integer& b);
Integer round_div(const Integer& a, const Integer& b);
Integer mod_positive(const Integer& a, const Integer& m);

}  // namespace autorecon
