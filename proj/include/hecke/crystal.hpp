#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hecke/combinatorics.hpp"

namespace hecke {

/// The index set J_+ = {lo, ..., hi}.
struct Window {
  long lo = 0;
  long hi = 0;
  long size() const { return hi - lo + 1; }
  bool contains(long j) const { return lo <= j && j <= hi; }
  friend auto operator<=>(const Window&, const Window&) = default;
  friend bool operator==(const Window&, const Window&) = default;
};

/// An ell-tuple of 01-sequences over a window, stored in the V-picture
/// (a 1 at position j is the vector v_j of the wedge factor).
class ZeroOneTuple {
 public:
  ZeroOneTuple() = default;
  ZeroOneTuple(Window window, std::vector<std::vector<std::uint8_t>> bits);

  const Window& window() const { return window_; }
  int ell() const { return static_cast<int>(bits_.size()); }
  std::uint8_t bit(int comp, long j) const { return bits_[static_cast<std::size_t>(comp)][static_cast<std::size_t>(j - window_.lo)]; }
  const std::vector<std::vector<std::uint8_t>>& bits() const { return bits_; }
  /// Positions of the ones in component k, increasing.
  std::vector<long> ones(int comp) const;
  /// Positions of the zeros in component k, increasing (the W-picture positions).
  std::vector<long> zeros(int comp) const;
  std::string to_string() const;

  friend auto operator<=>(const ZeroOneTuple&, const ZeroOneTuple&) = default;
  friend bool operator==(const ZeroOneTuple&, const ZeroOneTuple&) = default;

 private:
  friend std::optional<ZeroOneTuple> move_one(const ZeroOneTuple&, int, long, long);
  Window window_;
  std::vector<std::vector<std::uint8_t>> bits_;
};

/// Order in which the tensor factors are read by the signature rule.
enum class Orientation { Forward, Reverse };

/// The orientation under which the crystal reproduces the nonzero simple labels of the
/// cellular algebra (selected by the classification agreement test).
inline constexpr Orientation kDefaultOrientation = Orientation::Reverse;

std::string to_string(Orientation o);

/// f_j: moves one 1 from j to j+1 in the component picked by the signature rule.
/// Factor k contributes '+' if its bits at (j, j+1) are (1,0) and '-' if (0,1);
/// pairs '+' followed by '-' cancel; f_j acts on the leftmost surviving '+'.
/// Returns nullopt when undefined. Requires j, j+1 in the window.
std::optional<ZeroOneTuple> crystal_f(const ZeroOneTuple& v, long j, Orientation o = kDefaultOrientation);
/// e_j: acts on the rightmost surviving '-' by moving a 1 from j+1 to j.
std::optional<ZeroOneTuple> crystal_e(const ZeroOneTuple& v, long j, Orientation o = kDefaultOrientation);

/// Default window for parameters omega and depth r: lo = min(omega) - r, hi = max(omega) + r + 1,
/// with hi raised until |J_+| >= 2 max(n_i) for n_i = omega_i - lo + 1.
Window default_window(const std::vector<long>& omega, int r);

/// n_i = omega_i - lo + 1; throws std::invalid_argument if some n_i < 1.
std::vector<int> heights_from_omega(const std::vector<long>& omega, long lo);

/// Component k has ones at its counts[k] lowest window positions (V-picture).
/// Throws std::invalid_argument if a count does not fit in the window.
ZeroOneTuple empty_label(const Window& window, const std::vector<int>& counts);
/// The c0 empty label with counts n_i = omega_i - lo + 1.
ZeroOneTuple empty_label(const std::vector<long>& omega, const Window& window);

/// gamma: component k with c_k = 0 reads its ones i_1 < ... < i_n and gives
/// lambda_j = i_{n-j+1} - (lo + n - j); with c_k = 1 it reads the zeros j_1 < ... < j_m and
/// gives lambda_j = (hi - m + j) - j_j. Throws std::domain_error if a component is not a partition.
Multipartition gamma(const ZeroOneTuple& v, const std::vector<int>& c);

struct CrystalEdge {
  std::size_t from;
  std::size_t to;
  long j;
};

/// A connected component explored from the empty label by f-steps.
struct CrystalComponent {
  Window window;
  Orientation orientation = kDefaultOrientation;
  std::vector<ZeroOneTuple> vertices;  // breadth-first order
  std::vector<int> depth;
  std::vector<CrystalEdge> edges;
};

/// Breadth-first closure of the c0 empty label under every defined f_j, up to depth r_max.
CrystalComponent component_of_empty(const std::vector<long>& omega, int r_max, Orientation o = kDefaultOrientation,
                                    std::optional<Window> window = std::nullopt);

/// gamma-images (in the c0 picture) of the depth-r vertices, in enumerate_multipartitions order.
std::vector<Multipartition> nonzero_labels(const std::vector<long>& omega, int r, Orientation o = kDefaultOrientation,
                                           std::optional<Window> window = std::nullopt);
/// The same vertices read through gamma with twist c (counts |J_+| - n_k where c_k = 1).
std::vector<Multipartition> nonzero_labels(const std::vector<long>& omega, int r, const std::vector<int>& c,
                                           Orientation o = kDefaultOrientation,
                                           std::optional<Window> window = std::nullopt);

}  // namespace hecke
