#include "hecke/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hecke {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix_rows(const std::vector<std::size_t>& idx) const {
  Matrix s(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& q : c.data_) q *= s;
  return c;
}

Matrix rref(Matrix a, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t p = lead_row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead_row, j));
    const Rational inv = 1 / a(lead_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (a(lead_row, j) != 0) a(i, j) -= f * a(lead_row, j);
    }
    piv.push_back(col);
    ++lead_row;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::size_t rank(const Matrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

Matrix nullspace(const Matrix& a) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix basis(free_cols.size(), a.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(k, f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) basis(k, piv[i]) = -r(i, f);
  }
  return basis;
}

Matrix left_nullspace(const Matrix& a) { return nullspace(a.transpose()); }

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::size_t> independent_rows(const Matrix& a) {
  // Column-pivoted elimination on the transpose picks the first maximal row set.
  std::vector<std::size_t> piv;
  rref(a.transpose(), &piv);
  return piv;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  // X a = b  <=>  a^T X^T = b^T.
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  if (b.cols() != n) throw std::invalid_argument("solve_left: dimension mismatch");
  Matrix aug(n, k + b.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(j, i);
    for (std::size_t j = 0; j < b.rows(); ++j) aug(i, k + j) = b(j, i);
  }
  std::vector<std::size_t> piv;
  const Matrix r = rref(std::move(aug), &piv);
  for (auto p : piv)
    if (p >= k) return std::nullopt;
  if (piv.size() != k) throw std::invalid_argument("solve_left: rows of a are dependent");
  Matrix x(b.rows(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) x(j, piv[i]) = r(i, k + j);
  return x;
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
  std::vector<Rational> out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[j] += v[i] * m(i, j);
  }
  return out;
}

}  // namespace hecke
