#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/cellular.hpp"
#include "hecke/combinatorics.hpp"

namespace hecke {

/// Component i kept if c_i = 0, transposed if c_i = 1.
Multipartition eta(const Multipartition& lambda, const std::vector<int>& c);

/// omega (weakly decreasing), xi, and the base point lo giving heights n_i = omega_i - lo + 1.
class XiContext {
 public:
  /// Throws std::invalid_argument if omega is not weakly decreasing, xi has the wrong size,
  /// or lo > omega_ell.
  XiContext(std::vector<long> omega, Permutation xi, long lo);
  /// lo = min(omega) - r + 1, so every height is at least r.
  static XiContext for_size(std::vector<long> omega, Permutation xi, int r);

  const std::vector<long>& omega() const { return omega_; }
  const Permutation& xi() const { return xi_; }
  long lo() const { return lo_; }
  int ell() const { return static_cast<int>(omega_.size()); }
  const std::vector<int>& heights() const { return n_; }
  /// Height of column j (0-based): n_{(j)xi}.
  int column_height(int j) const { return n_[static_cast<std::size_t>(xi_[j])]; }
  /// The same omega and lo with xi = 1.
  XiContext untwisted() const;

 private:
  std::vector<long> omega_;
  Permutation xi_;
  long lo_;
  std::vector<int> n_;
};

/// ell columns, each read top-down and strictly decreasing.
class ColumnStrictTableau {
 public:
  ColumnStrictTableau() = default;
  /// Throws std::invalid_argument unless every column strictly decreases.
  explicit ColumnStrictTableau(std::vector<std::vector<int>> columns);

  const std::vector<std::vector<int>>& columns() const { return cols_; }
  int ell() const { return static_cast<int>(cols_.size()); }
  int operator()(int row, int col) const { return cols_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)]; }
  std::string to_string() const;

  friend bool operator==(const ColumnStrictTableau&, const ColumnStrictTableau&) = default;

 private:
  std::vector<std::vector<int>> cols_;
};

/// A^xi: column j is n_{(j)xi}, ..., 2, 1.
ColumnStrictTableau base_tableau(const XiContext& ctx);

/// lambda^(j)_i = A(i, j) - A^xi(i, j). Throws std::invalid_argument if the column heights
/// do not match ctx or an entry falls below the base tableau.
Multipartition lambda_of_A(const ColumnStrictTableau& a, const XiContext& ctx);
/// A(i, j) = lambda^(j)_i + A^xi(i, j). Throws std::invalid_argument if component j has
/// more than n_{(j)xi} parts.
ColumnStrictTableau A_of_lambda(const Multipartition& lambda, const XiContext& ctx);

/// Columns read left to right, each top-down.
std::vector<int> gamma_word(const ColumnStrictTableau& a);

/// shape(P(gamma(A))) equals the transpose of the decreasingly sorted heights.
bool is_standard(const ColumnStrictTableau& a, const XiContext& ctx);

/// Column i of R(A), top-down, is column i of P(gamma(A)) bottom-up.
/// Throws std::invalid_argument on non-standard input.
ColumnStrictTableau r_map(const ColumnStrictTableau& a, const XiContext& ctx);

/// lambda_{R(A)} for A = A_of_lambda(lambda), or nullopt when A is not standard (D^xi(lambda) = 0).
std::optional<Multipartition> mullineux_xi(const Multipartition& lambda, const XiContext& ctx);

/// eta with c = 1^ell, then mullineux_xi with xi the longest element and omega sorted
/// decreasingly (lo from XiContext::for_size). Maps labels of the N(c0) simples to the
/// labels of the isomorphic M(c0) simples.
std::optional<Multipartition> generalized_mullineux(const Multipartition& lambda, const std::vector<long>& omega);

struct SimpleMatch {
  Multipartition from;
  Multipartition to;
  std::size_t intertwiners = 0;
};

/// For every label with a nonzero simple in a, the unique label of b whose simple is isomorphic.
/// Candidates are pruned by dimension; isomorphism is intertwiner_dim >= 1.
/// Throws std::logic_error on a missing or repeated match. threads <= 1 runs serially.
std::vector<SimpleMatch> match_simples(const CellularBasis& a, const CellularBasis& b, unsigned threads = 1);

}  // namespace hecke
