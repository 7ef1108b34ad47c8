#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/combinatorics.hpp"
#include "hecke/matrix.hpp"
#include "hecke/module.hpp"

namespace hecke {

enum class FamilyKind { M, N, MXi, NXi };

/// One of the four cellular-basis families m^c, n^c, m^xi, n^xi.
///
/// The general element is d(s)^{-1} pi x^c d(t) (resp. d(s)^{-1} pi~ y^c d(t)),
/// with omega replaced by omega^xi inside pi. M and N carry xi = 1, MXi and NXi
/// carry c = 0.
struct BasisFamily {
  FamilyKind kind = FamilyKind::M;
  std::vector<int> c;
  Permutation xi;

  static BasisFamily M(std::vector<int> c);
  static BasisFamily N(std::vector<int> c);
  static BasisFamily MXi(const Permutation& xi);
  static BasisFamily NXi(const Permutation& xi);

  int ell() const { return static_cast<int>(c.size()); }
  bool is_n() const { return kind == FamilyKind::N || kind == FamilyKind::NXi; }
  /// The family paired with this one by tau_hat: M(c) <-> N(c reversed), MXi(xi) <-> NXi(xi).
  BasisFamily dual() const;
  /// e.g. "m:0,1", "n:1,1", "mxi:2,1", "nxi:1,2".
  std::string to_string() const;
  /// Parses the to_string form; "m" and "n" alone mean c = 0^ell, "mxi"/"nxi" alone mean xi = 1.
  static BasisFamily parse(const std::string& text, int ell);

  friend bool operator==(const BasisFamily&, const BasisFamily&) = default;
};

/// Twisted Young-subgroup sums: factor i is the trivial sum if c_i = 0, the sign sum if c_i = 1.
Element x_lambda_c(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<int>& c);
/// The complementary twist (sign sum if c_i = 0).
Element y_lambda_c(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<int>& c);

/// prod_{i=1}^{ell-1} (x_1 - w_{i+1}) ... (x_{a_i} - w_{i+1}).
Element pi_bracket(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<long>& omega);
/// prod_{i=1}^{ell-1} (x_1 - w_{ell-i}) ... (x_{a_i} - w_{ell-i}).
Element pi_tilde_bracket(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<long>& omega);

/// The omega used inside pi for this family: omega^xi = (omega_{(1)xi}, ..., omega_{(ell)xi}).
std::vector<long> twisted_omega(const BasisFamily& family, const std::vector<long>& omega);

/// pi x^c (or pi~ y^c): the element with left and right tableau t^lambda.
Element cellular_core(const HeckeAlgebra& alg, const BasisFamily& family, const Multipartition& lambda);
Element cellular_element(const HeckeAlgebra& alg, const BasisFamily& family, const Tableau& s, const Tableau& t);

/// z^c_lambda = m^c_lambda w_lambda n_{lambda'}, the n-factor taken from M(c).dual().
Element z_lambda(const HeckeAlgebra& alg, const std::vector<int>& c, const Multipartition& lambda);

/// All cellular elements of one family with the change of basis to normal-form monomials.
///
/// Rows of change_of_basis() are the coefficient vectors of the cellular elements,
/// ordered by label (enumerate_multipartitions order), then s, then t.
/// Construction throws std::logic_error if the matrix is singular.
class CellularBasis {
 public:
  CellularBasis(std::shared_ptr<const HeckeAlgebra> alg, BasisFamily family);

  const HeckeAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const HeckeAlgebra> algebra_ptr() const { return alg_; }
  const BasisFamily& family() const { return family_; }
  const std::vector<Multipartition>& labels() const { return labels_; }
  const std::vector<Tableau>& tableaux(std::size_t label) const { return std_[label]; }
  std::size_t label_index(const Multipartition& lambda) const;

  std::size_t index(std::size_t label, std::size_t s, std::size_t t) const;
  const Element& element(std::size_t label, std::size_t s, std::size_t t) const { return elems_[index(label, s, t)]; }
  std::size_t size() const { return elems_.size(); }

  const Matrix& change_of_basis() const { return change_; }
  const Matrix& inverse_change() const { return inverse_; }

  /// Cellular-basis coordinates of h.
  std::vector<Rational> expand(const Element& h) const;
  /// Only the coordinates listed in cols.
  std::vector<Rational> expand(const Element& h, const std::vector<std::size_t>& cols) const;

 private:
  std::shared_ptr<const HeckeAlgebra> alg_;
  BasisFamily family_;
  std::vector<Multipartition> labels_;
  std::vector<std::vector<Tableau>> std_;
  std::vector<std::size_t> offset_;
  std::vector<Element> elems_;
  Matrix change_;
  Matrix inverse_;
};

/// star(c_{s,t}) = c_{t,s} for every pair; returns the first failing pair.
std::optional<std::string> check_star_symmetry(const CellularBasis& basis);

/// Triangular action: c_{s,t} g expands as sum_u r_{t,u}(g) c_{s,u} plus terms in
/// strictly higher cells (mu strictly dominating lambda), with r_{t,u}(g)
/// independent of s. Checked for every generator s_i, x_k. Returns the first violation.
std::optional<std::string> check_cell_action(const CellularBasis& basis);

/// A cell module with its Gram form.
struct CellModule {
  Multipartition label;
  BasisFamily family;
  std::vector<Tableau> basis;
  ModuleRealization action;
  Matrix gram;
};

CellModule cell_module(const CellularBasis& basis, const Multipartition& lambda);

/// Gram matrix through the cellular structure constants: entry (s, t) is the coefficient
/// of c_{t^lambda, t^lambda} in c_{t^lambda, s} c_{t, t^lambda}.
Matrix gram_matrix(const CellularBasis& basis, const Multipartition& lambda);

/// The same form through the trace: tau_hat(c_{t^lambda, s} c_{t, t^lambda} d_{u, u}) where d is the
/// dual family at lambda' and u = (t^lambda)'.
Matrix gram_matrix_by_trace(const CellularBasis& basis, const Multipartition& lambda);

std::size_t simple_dim(const CellModule& module);

/// S(lambda) / rad, realized on the images of a maximal independent set of Gram rows
/// (first maximal set). Throws std::invalid_argument when the quotient is zero.
ModuleRealization simple_module(const CellModule& module);

/// The right ideal spanned by z^c_lambda d(t), t in Std(lambda'), as a module.
/// Throws std::logic_error if the span has the wrong dimension or is not H-stable.
ModuleRealization subcell_module(const HeckeAlgebra& alg, const std::vector<int>& c, const Multipartition& lambda);

}  // namespace hecke
