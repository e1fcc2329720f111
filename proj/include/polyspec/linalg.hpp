#pragma once

#include "polyspec/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polyspec {

/// Dense row-major rational matrix; rows.size() x cols.
struct Matrix {
  std::size_t cols = 0;
  std::vector<RationalVector> rows;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : cols(c), rows(r, RationalVector(c, Rational(0))) {}
  explicit Matrix(std::vector<RationalVector> r, std::size_t c) : cols(c), rows(std::move(r)) {}

  std::size_t row_count() const { return rows.size(); }
  RationalVector& operator[](std::size_t i) { return rows[i]; }
  const RationalVector& operator[](std::size_t i) const { return rows[i]; }

  static Matrix identity(std::size_t n);
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix operator*(const Matrix& a, const Matrix& b);
RationalVector operator*(const Matrix& a, const RationalVector& x);

struct EchelonForm {
  Matrix rows;                      // nonzero rows only, reduced
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form over Q. Zero rows are dropped, so
/// rows.row_count() equals the rank. Unique for a given row space.
EchelonForm rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact determinant by fraction-ful Gaussian elimination. m must be square.
Rational determinant(const Matrix& m);

/// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Gram matrix rows * rows^T.
Matrix gram(const Matrix& rows);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> null_space(const Matrix& m);

}  // namespace polyspec
