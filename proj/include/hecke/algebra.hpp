#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hecke/combinatorics.hpp"
#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"

namespace hecke {

class HeckeAlgebra;

/// Index of a normal-form monomial x^a w: exponent index * r! + permutation index.
using MonomialIndex = std::uint32_t;

/// Finite rational combination of normal-form monomials x^a w, 0 <= a_i < ell.
/// Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<MonomialIndex, Rational>;

  Element() = default;
  explicit Element(const HeckeAlgebra* alg) : alg_(alg) {}
  Element(const HeckeAlgebra* alg, Terms terms);

  const HeckeAlgebra* algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(MonomialIndex m) const;

  /// Adds c * monomial m in place.
  void add_term(MonomialIndex m, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, const Element& h);
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  const HeckeAlgebra* alg_ = nullptr;
  Terms terms_;
};

/// The degenerate cyclotomic Hecke algebra H_{ell,r} with integral parameters omega.
///
/// All reduction data (the x_j^ell rewrites, w * x^b pushes and the normal forms of
/// out-of-range x-monomials) is built in the constructor, so a constructed
/// algebra is immutable and safe to share across threads.
class HeckeAlgebra {
 public:
  HeckeAlgebra(int ell, int r, std::vector<long> omega);
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  static std::shared_ptr<const HeckeAlgebra> create(int ell, int r, std::vector<long> omega) {
    return std::make_shared<const HeckeAlgebra>(ell, r, std::move(omega));
  }

  int ell() const { return ell_; }
  int r() const { return r_; }
  const std::vector<long>& omega() const { return omega_; }
  /// Coefficients f_0..f_ell of f(x) = (x - omega_1) ... (x - omega_ell).
  const std::vector<Rational>& cyclotomic_coefficients() const { return fcoef_; }

  std::size_t dimension() const { return num_exps_ * num_perms_; }
  std::size_t num_permutations() const { return num_perms_; }
  std::size_t num_exponents() const { return num_exps_; }

  const Permutation& permutation(std::size_t index) const { return perms_[index]; }
  std::size_t permutation_index(const Permutation& w) const;
  std::vector<int> exponent(std::size_t index) const;
  /// Exponent vector must lie in {0..ell-1}^r.
  std::size_t exponent_index(const std::vector<int>& a) const;

  MonomialIndex monomial_index(const std::vector<int>& a, const Permutation& w) const;
  std::vector<int> monomial_exponent(MonomialIndex m) const { return exponent(m / num_perms_); }
  const Permutation& monomial_permutation(MonomialIndex m) const { return perms_[m % num_perms_]; }
  /// Index of x_1^{ell-1} ... x_r^{ell-1}.
  MonomialIndex top_monomial() const;

  Element zero() const { return Element(this); }
  Element one() const;
  /// s_{i+1} for 0-based i.
  Element s(int i) const;
  /// x_{k+1} for 0-based k.
  Element x(int k) const;
  Element from_permutation(const Permutation& w) const;
  /// x^a for any nonnegative exponents, reduced to normal form.
  Element from_x_monomial(const std::vector<int>& a) const;
  /// The basis element x^a w (requires a in {0..ell-1}^r).
  Element monomial(const std::vector<int>& a, const Permutation& w) const;
  Element basis_element(MonomialIndex m) const;

  Element multiply(const Element& a, const Element& b) const;
  /// The anti-involution fixing every s_i and x_1.
  Element star(const Element& h) const;
  /// Coefficient of x_1^{ell-1} ... x_r^{ell-1} * 1.
  Rational tau_hat(const Element& h) const;
  /// tau_hat(a * star(b)).
  Rational pairing(const Element& a, const Element& b) const;

  std::vector<Rational> to_vector(const Element& h) const;
  Element from_vector(const std::vector<Rational>& v) const;

  /// Normal form of x_j^ell (0-based j).
  const Element& x_power_rewrite(int j) const { return xpow_[static_cast<std::size_t>(j)]; }

 private:
  friend class Element;
  using Terms = Element::Terms;

  void build_permutations();
  void build_x_powers();
  void build_pushes();
  void build_reductions();
  bool load_cache();
  void store_cache() const;

  Terms push(std::size_t perm, std::size_t exp) const { return push_[perm * num_exps_ + exp]; }
  const Terms& reduced(const std::vector<int>& e) const;
  Terms multiply_monomials(MonomialIndex a, MonomialIndex b) const;
  /// Right multiplication of every term by the permutation with index v.
  Terms times_perm(const Terms& t, std::size_t v) const;
  /// s_i * (x^e w) for a normal-form monomial, exponents kept in range.
  void left_simple(int i, const std::vector<int>& e, std::size_t w, const Rational& c, Terms& out) const;

  int ell_;
  int r_;
  std::vector<long> omega_;
  std::vector<Rational> fcoef_;
  std::size_t num_perms_ = 0;
  std::size_t num_exps_ = 0;
  std::vector<Permutation> perms_;
  std::vector<std::uint32_t> perm_mul_;
  std::vector<std::uint32_t> perm_inv_;
  std::vector<std::uint32_t> perm_simple_left_;  // [i * n! + w] = index of s_i w
  std::vector<Element> xpow_;
  std::vector<Terms> push_;
  int red_base_ = 0;
  std::vector<Terms> reduce_;
};

/// Evaluates every defining relation in normal form; returns the name of the first
/// relation that does not vanish, or nullopt if all hold.
std::optional<std::string> check_relations(const HeckeAlgebra& alg);

/// Checks (ab)c = a(bc) on `samples` random triples of basis monomials.
/// Returns a description of the first failing triple, or nullopt.
std::optional<std::string> check_associativity(const HeckeAlgebra& alg, int samples, std::uint64_t seed);

/// Relations, associativity on a random sample and closure of the monomial basis.
bool verify_basis(const HeckeAlgebra& alg, int samples = 200, std::uint64_t seed = 1);

std::string to_string(const Element& h);

}  // namespace hecke
