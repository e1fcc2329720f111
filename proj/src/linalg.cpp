#include "polyspec/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace polyspec {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = rows[i][j];
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.row_count()) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.row_count(), b.cols);
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

RationalVector operator*(const Matrix& a, const RationalVector& x) {
  if (a.cols != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RationalVector y(a.row_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) y[i] = dot(a[i], x);
  return y;
}

EchelonForm rref(const Matrix& m) {
  std::vector<RationalVector> a = m.rows;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols && lead_row < a.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.size() && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[lead_row]);
    Rational inv = 1 / a[lead_row][col];
    for (auto& x : a[lead_row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == lead_row || sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= f * a[lead_row][j];
    }
    pivots.push_back(col);
    ++lead_row;
  }
  a.resize(lead_row);
  return {Matrix(std::move(a), m.cols), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Rational determinant(const Matrix& m) {
  const std::size_t n = m.row_count();
  if (n != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<RationalVector> a = m.rows;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.row_count();
  if (n != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  EchelonForm e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  }
  return inv;
}

Matrix gram(const Matrix& rows) {
  const std::size_t k = rows.row_count();
  Matrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      g[i][j] = dot(rows[i], rows[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

std::vector<RationalVector> null_space(const Matrix& m) {
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace polyspec
