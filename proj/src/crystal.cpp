#include "hecke/crystal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hecke {

ZeroOneTuple::ZeroOneTuple(Window window, std::vector<std::vector<std::uint8_t>> bits)
    : window_(window), bits_(std::move(bits)) {
  if (window_.hi < window_.lo) throw std::invalid_argument("ZeroOneTuple: empty window");
  for (const auto& b : bits_) {
    if (static_cast<long>(b.size()) != window_.size()) throw std::invalid_argument("ZeroOneTuple: component length differs from window");
    for (auto x : b)
      if (x > 1) throw std::invalid_argument("ZeroOneTuple: bits must be 0 or 1");
  }
}

std::vector<long> ZeroOneTuple::ones(int comp) const {
  std::vector<long> out;
  const auto& b = bits_[static_cast<std::size_t>(comp)];
  for (std::size_t p = 0; p < b.size(); ++p)
    if (b[p]) out.push_back(window_.lo + static_cast<long>(p));
  return out;
}

std::vector<long> ZeroOneTuple::zeros(int comp) const {
  std::vector<long> out;
  const auto& b = bits_[static_cast<std::size_t>(comp)];
  for (std::size_t p = 0; p < b.size(); ++p)
    if (!b[p]) out.push_back(window_.lo + static_cast<long>(p));
  return out;
}

std::string ZeroOneTuple::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (k) out += '|';
    for (auto x : bits_[k]) out += static_cast<char>('0' + x);
  }
  return out;
}

std::string to_string(Orientation o) { return o == Orientation::Forward ? "forward" : "reverse"; }

std::optional<ZeroOneTuple> move_one(const ZeroOneTuple& v, int comp, long from, long to) {
  ZeroOneTuple out = v;
  auto& b = out.bits_[static_cast<std::size_t>(comp)];
  b[static_cast<std::size_t>(from - v.window_.lo)] = 0;
  b[static_cast<std::size_t>(to - v.window_.lo)] = 1;
  return out;
}

namespace {

// Components in reading order, reduced to the surviving signature after cancelling
// every '+' that is followed by a later '-'.
struct Signature {
  std::vector<int> plus;   // surviving '+', in reading order
  std::vector<int> minus;  // surviving '-', in reading order
};

Signature reduced_signature(const ZeroOneTuple& v, long j, Orientation o) {
  const int ell = v.ell();
  std::vector<int> order(static_cast<std::size_t>(ell));
  for (int k = 0; k < ell; ++k) order[static_cast<std::size_t>(k)] = o == Orientation::Forward ? k : ell - 1 - k;
  Signature sig;
  for (int k : order) {
    const auto a = v.bit(k, j);
    const auto b = v.bit(k, j + 1);
    if (a == 1 && b == 0) {
      sig.plus.push_back(k);
    } else if (a == 0 && b == 1) {
      if (!sig.plus.empty())
        sig.plus.pop_back();
      else
        sig.minus.push_back(k);
    }
  }
  return sig;
}

void require_edge(const ZeroOneTuple& v, long j) {
  if (!v.window().contains(j) || !v.window().contains(j + 1)) throw std::out_of_range("crystal operator index outside the window");
}

}  // namespace

std::optional<ZeroOneTuple> crystal_f(const ZeroOneTuple& v, long j, Orientation o) {
  require_edge(v, j);
  const Signature sig = reduced_signature(v, j, o);
  if (sig.plus.empty()) return std::nullopt;
  return move_one(v, sig.plus.front(), j, j + 1);
}

std::optional<ZeroOneTuple> crystal_e(const ZeroOneTuple& v, long j, Orientation o) {
  require_edge(v, j);
  const Signature sig = reduced_signature(v, j, o);
  if (sig.minus.empty()) return std::nullopt;
  return move_one(v, sig.minus.back(), j + 1, j);
}

std::vector<int> heights_from_omega(const std::vector<long>& omega, long lo) {
  std::vector<int> n;
  for (long w : omega) {
    if (w - lo + 1 < 1) throw std::invalid_argument("heights: lo exceeds some omega_i");
    n.push_back(static_cast<int>(w - lo + 1));
  }
  return n;
}

Window default_window(const std::vector<long>& omega, int r) {
  if (omega.empty()) throw std::invalid_argument("default_window: empty omega");
  const long lo = *std::min_element(omega.begin(), omega.end()) - r;
  long hi = *std::max_element(omega.begin(), omega.end()) + r + 1;
  const auto n = heights_from_omega(omega, lo);
  const long need = 2L * *std::max_element(n.begin(), n.end());
  if (hi - lo + 1 < need) hi = lo + need - 1;
  return {lo, hi};
}

ZeroOneTuple empty_label(const Window& window, const std::vector<int>& counts) {
  std::vector<std::vector<std::uint8_t>> bits;
  for (int n : counts) {
    if (n < 0 || n > window.size()) throw std::invalid_argument("empty_label: window too small for the counts");
    std::vector<std::uint8_t> b(static_cast<std::size_t>(window.size()), 0);
    std::fill(b.begin(), b.begin() + n, 1);
    bits.push_back(std::move(b));
  }
  return ZeroOneTuple(window, std::move(bits));
}

ZeroOneTuple empty_label(const std::vector<long>& omega, const Window& window) {
  return empty_label(window, heights_from_omega(omega, window.lo));
}

Multipartition gamma(const ZeroOneTuple& v, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != v.ell()) throw std::invalid_argument("gamma: c has the wrong length");
  const long lo = v.window().lo;
  const long hi = v.window().hi;
  std::vector<Partition> comps;
  for (int k = 0; k < v.ell(); ++k) {
    std::vector<int> parts;
    if (c[static_cast<std::size_t>(k)] == 0) {
      const auto pos = v.ones(k);
      const long n = static_cast<long>(pos.size());
      for (long j = 1; j <= n; ++j) parts.push_back(static_cast<int>(pos[static_cast<std::size_t>(n - j)] - (lo + n - j)));
    } else {
      const auto pos = v.zeros(k);
      const long m = static_cast<long>(pos.size());
      for (long j = 1; j <= m; ++j) parts.push_back(static_cast<int>((hi - m + j) - pos[static_cast<std::size_t>(j - 1)]));
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] < 0 || (i && parts[i] > parts[i - 1])) throw std::domain_error("gamma: component is not a partition");
    comps.emplace_back(std::move(parts));
  }
  return Multipartition(std::move(comps));
}

CrystalComponent component_of_empty(const std::vector<long>& omega, int r_max, Orientation o, std::optional<Window> window) {
  CrystalComponent out;
  out.window = window ? *window : default_window(omega, r_max);
  out.orientation = o;
  std::map<ZeroOneTuple, std::size_t> seen;
  out.vertices.push_back(empty_label(omega, out.window));
  out.depth.push_back(0);
  seen.emplace(out.vertices.front(), 0);
  for (std::size_t head = 0; head < out.vertices.size(); ++head) {
    if (out.depth[head] >= r_max) continue;
    for (long j = out.window.lo; j < out.window.hi; ++j) {
      auto next = crystal_f(out.vertices[head], j, o);
      if (!next) continue;
      auto [it, fresh] = seen.emplace(*next, out.vertices.size());
      if (fresh) {
        out.vertices.push_back(*next);
        out.depth.push_back(out.depth[head] + 1);
      }
      out.edges.push_back({head, it->second, j});
    }
  }
  return out;
}

std::vector<Multipartition> nonzero_labels(const std::vector<long>& omega, int r, Orientation o, std::optional<Window> window) {
  return nonzero_labels(omega, r, std::vector<int>(omega.size(), 0), o, window);
}

std::vector<Multipartition> nonzero_labels(const std::vector<long>& omega, int r, const std::vector<int>& c, Orientation o,
                                           std::optional<Window> window) {
  const auto comp = component_of_empty(omega, r, o, window);
  std::vector<Multipartition> out;
  for (std::size_t i = 0; i < comp.vertices.size(); ++i)
    if (comp.depth[i] == r) out.push_back(gamma(comp.vertices[i], c));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace hecke
