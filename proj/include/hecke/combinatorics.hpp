#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hecke {

/// Integer partition stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are trimmed; throws std::invalid_argument if the parts
  /// are negative or not weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), or 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// An ell-tuple of partitions.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<std::vector<int>> components);
  static Multipartition empty(int ell);

  int ell() const { return static_cast<int>(components_.size()); }
  int size() const { return size_; }
  const Partition& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<Partition>& components() const { return components_; }
  /// The profile [a_0, ..., a_ell] with a_i = |lambda^(1)| + ... + |lambda^(i)|.
  std::vector<int> bracket() const;
  std::string to_string() const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
  friend bool operator==(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
  int size_ = 0;
};

/// Every ell-partition of r exactly once, ordered lexicographically descending
/// on the list of component part sequences (so ((r), 0, ..., 0) comes first).
std::vector<Multipartition> enumerate_multipartitions(int ell, int r);

/// Component-wise transpose with the component order reversed.
Multipartition conjugate(const Multipartition& lambda);

/// lambda dominates mu. Sizes and ell must agree (std::invalid_argument otherwise).
bool dominance_ge(const Multipartition& lambda, const Multipartition& mu);

/// A permutation of {0, ..., n-1} acting on the right: (i)w = images()[i].
/// The product a * b applies a first, then b.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// The simple transposition s_{i+1} swapping i and i+1 (0-based i).
  static Permutation simple(int n, int i);
  /// From the 1-based image table (i)w for i = 1..n.
  static Permutation from_one_based(const std::vector<int>& images);

  int size() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;
  /// Word (i_1, ..., i_k) of 0-based simple indices with w = s_{i_1} ... s_{i_k}, k = length().
  std::vector<int> reduced_word() const;
  /// Index of the first left descent (s_i w shorter than w), or -1 for the identity.
  int first_left_descent() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// Position of an entry: component, row and column, all 0-based.
struct Box {
  int comp = 0;
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A bijective filling of a multipartition diagram with 1..r.
///
/// Standardness is not required (t^lambda * w need not be standard); use
/// is_standard() where it matters.
class Tableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  Tableau() = default;
  /// Throws std::invalid_argument unless fillings match shape and use 1..r once each.
  Tableau(Multipartition shape, std::vector<Rows> fillings);

  const Multipartition& shape() const { return shape_; }
  const std::vector<Rows>& fillings() const { return fill_; }
  int size() const { return shape_.size(); }
  /// Box holding entry k (1-based).
  const Box& position(int k) const { return pos_[static_cast<std::size_t>(k - 1)]; }
  bool is_standard() const;
  /// Shape of the subtableau holding entries 1..i.
  Multipartition up_shape(int i) const;
  /// The tableau t*w: every entry e is replaced by (e)w.
  Tableau act(const Permutation& w) const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.fill_ == b.fill_ && a.shape_ == b.shape_; }

 private:
  Multipartition shape_;
  std::vector<Rows> fill_;
  std::vector<Box> pos_;
};

using StandardTableau = Tableau;

/// All standard lambda-tableaux. Order: lexicographic on the sequence of
/// (component, row) positions of entries 1..r, so t^lambda comes first.
std::vector<Tableau> standard_tableaux(const Multipartition& lambda);

/// s dominates t: up_shape(i) of s dominates that of t for every i.
/// Only the entry count must agree; shapes may differ.
bool tableau_dominance_ge(const Tableau& s, const Tableau& t);

/// t^lambda: 1..r along the rows of component 1, then component 2, ...
Tableau row_reading_tableau(const Multipartition& lambda);
/// t_lambda: 1..r down the columns of the last component, then the one before, ...
Tableau column_reading_tableau(const Multipartition& lambda);

/// d(t): the permutation with t^lambda * d(t) = t.
Permutation d_of(const Tableau& t);
Permutation w_bracket(const Multipartition& lambda);
/// w_lambda = d(t_lambda).
Permutation w_lambda(const Multipartition& lambda);

/// t': component s is the transpose of component ell-s+1 of t.
Tableau tableau_conjugate(const Tableau& t);

/// Residue omega_k + col - row of the node holding entry k, for each k = 1..r.
std::vector<long> residue_sequence(const Tableau& t, std::span<const long> omega);

/// Row-insertion tableau P(word). Rows weakly increase, columns strictly increase.
using RowTableau = std::vector<std::vector<int>>;
RowTableau rsk_insert(std::span<const int> word);
std::vector<int> row_shape(const RowTableau& p);

}  // namespace hecke
