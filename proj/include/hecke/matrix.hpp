#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Dense row-major matrix over the rationals.
///
/// Modules in this library are right modules, so vectors are rows and a
/// generator acts by v -> v * M.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  Matrix transpose() const;
  Matrix submatrix_rows(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; pivot columns are chosen left to right.
Matrix rref(Matrix a, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& a);

/// Basis (as rows) of {x : a * x^T = 0}.
Matrix nullspace(const Matrix& a);

/// Basis (as rows) of {v : v * a = 0}.
Matrix left_nullspace(const Matrix& a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Greedy maximal set of linearly independent rows, earliest rows first.
std::vector<std::size_t> independent_rows(const Matrix& a);

/// X with X * a = b, or nullopt when some row of b is outside the row space of a.
/// Rows of a must be linearly independent.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& m);

}  // namespace hecke
