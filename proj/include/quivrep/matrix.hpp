#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "quivrep/rational.hpp"

namespace quivrep {

/// Dense matrix over the rationals. Degenerate shapes (0 x n, n x 0) are legal
/// and represent maps to or from the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> data);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  /// Row-major construction from integer literals, convenient in tests.
  static Matrix from_int_rows(const std::vector<std::vector<long>>& rows);
  static Matrix scalar(std::size_t n, const Rat& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j);
  const Rat& at(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rat& c, Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Copies `m` into this matrix with upper-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot column of each pivot row
};

/// Reduced row echelon form (Gauss-Jordan, exact).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right kernel {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

/// Columns form a basis of the column space.
Matrix image_basis(const Matrix& m);

/// Rows form a basis of the left kernel {y : y m = 0}.
Matrix left_kernel_basis(const Matrix& m);

/// One exact solution X of A X = B, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

Matrix mat_pow(const Matrix& m, std::size_t e);

}  // namespace quivrep
