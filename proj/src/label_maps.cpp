#include "hecke/label_maps.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/parallel.hpp"

namespace hecke {

Multipartition eta(const Multipartition& lambda, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != lambda.ell()) throw std::invalid_argument("eta: c has the wrong length");
  std::vector<Partition> comps;
  for (int i = 0; i < lambda.ell(); ++i) comps.push_back(c[static_cast<std::size_t>(i)] ? lambda[i].conjugate() : lambda[i]);
  return Multipartition(std::move(comps));
}

XiContext::XiContext(std::vector<long> omega, Permutation xi, long lo) : omega_(std::move(omega)), xi_(std::move(xi)), lo_(lo) {
  if (omega_.empty()) throw std::invalid_argument("XiContext: empty omega");
  if (!std::is_sorted(omega_.begin(), omega_.end(), std::greater<>()))
    throw std::invalid_argument("XiContext: omega must be weakly decreasing");
  if (xi_.size() != ell()) throw std::invalid_argument("XiContext: xi has the wrong size");
  if (lo_ > omega_.back()) throw std::invalid_argument("XiContext: lo exceeds omega_ell");
  for (long w : omega_) n_.push_back(static_cast<int>(w - lo_ + 1));
}

XiContext XiContext::for_size(std::vector<long> omega, Permutation xi, int r) {
  if (omega.empty()) throw std::invalid_argument("XiContext: empty omega");
  const long lo = *std::min_element(omega.begin(), omega.end()) - std::max(r, 1) + 1;
  return XiContext(std::move(omega), std::move(xi), lo);
}

XiContext XiContext::untwisted() const { return XiContext(omega_, Permutation::identity(ell()), lo_); }

ColumnStrictTableau::ColumnStrictTableau(std::vector<std::vector<int>> columns) : cols_(std::move(columns)) {
  for (const auto& col : cols_)
    for (std::size_t i = 1; i < col.size(); ++i)
      if (col[i - 1] <= col[i]) throw std::invalid_argument("ColumnStrictTableau: column not strictly decreasing");
}

std::string ColumnStrictTableau::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (j) out += ",";
    out += "(";
    for (std::size_t i = 0; i < cols_[j].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cols_[j][i]);
    }
    out += ")";
  }
  return out + ")";
}

ColumnStrictTableau base_tableau(const XiContext& ctx) {
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < ctx.ell(); ++j) {
    std::vector<int> col;
    for (int v = ctx.column_height(j); v >= 1; --v) col.push_back(v);
    cols.push_back(std::move(col));
  }
  return ColumnStrictTableau(std::move(cols));
}

Multipartition lambda_of_A(const ColumnStrictTableau& a, const XiContext& ctx) {
  if (a.ell() != ctx.ell()) throw std::invalid_argument("lambda_of_A: wrong number of columns");
  std::vector<Partition> comps;
  for (int j = 0; j < ctx.ell(); ++j) {
    const auto& col = a.columns()[static_cast<std::size_t>(j)];
    const int n = ctx.column_height(j);
    if (static_cast<int>(col.size()) != n) throw std::invalid_argument("lambda_of_A: column height does not match the context");
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
      const int v = col[static_cast<std::size_t>(i)] - (n - i);
      if (v < 0) throw std::invalid_argument("lambda_of_A: entry below the base tableau");
      parts.push_back(v);
    }
    comps.emplace_back(std::move(parts));
  }
  return Multipartition(std::move(comps));
}

ColumnStrictTableau A_of_lambda(const Multipartition& lambda, const XiContext& ctx) {
  if (lambda.ell() != ctx.ell()) throw std::invalid_argument("A_of_lambda: wrong number of components");
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < ctx.ell(); ++j) {
    const int n = ctx.column_height(j);
    if (lambda[j].length() > n) throw std::invalid_argument("A_of_lambda: too many parts for the column height");
    std::vector<int> col;
    for (int i = 0; i < n; ++i) col.push_back(lambda[j][i] + n - i);
    cols.push_back(std::move(col));
  }
  return ColumnStrictTableau(std::move(cols));
}

std::vector<int> gamma_word(const ColumnStrictTableau& a) {
  std::vector<int> w;
  for (const auto& col : a.columns()) w.insert(w.end(), col.begin(), col.end());
  return w;
}

namespace {

std::vector<int> transposed_heights(const XiContext& ctx) {
  std::vector<int> n = ctx.heights();
  std::sort(n.begin(), n.end(), std::greater<>());
  return Partition(n).conjugate().parts();
}

}  // namespace

bool is_standard(const ColumnStrictTableau& a, const XiContext& ctx) {
  const auto word = gamma_word(a);
  return row_shape(rsk_insert(word)) == transposed_heights(ctx);
}

ColumnStrictTableau r_map(const ColumnStrictTableau& a, const XiContext& ctx) {
  const auto word = gamma_word(a);
  const RowTableau p = rsk_insert(word);
  if (row_shape(p) != transposed_heights(ctx)) throw std::invalid_argument("r_map: tableau is not standard");
  std::vector<std::vector<int>> cols;
  for (std::size_t i = 0; !p.empty() && i < p.front().size(); ++i) {
    std::vector<int> col;
    for (std::size_t row = p.size(); row-- > 0;)
      if (i < p[row].size()) col.push_back(p[row][i]);
    cols.push_back(std::move(col));
  }
  return ColumnStrictTableau(std::move(cols));
}

std::optional<Multipartition> mullineux_xi(const Multipartition& lambda, const XiContext& ctx) {
  const ColumnStrictTableau a = A_of_lambda(lambda, ctx);
  if (!is_standard(a, ctx)) return std::nullopt;
  return lambda_of_A(r_map(a, ctx), ctx.untwisted());
}

std::optional<Multipartition> generalized_mullineux(const Multipartition& lambda, const std::vector<long>& omega) {
  const int ell = lambda.ell();
  if (static_cast<int>(omega.size()) != ell) throw std::invalid_argument("generalized_mullineux: omega has the wrong length");
  std::vector<int> w0(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) w0[static_cast<std::size_t>(i)] = ell - 1 - i;
  const auto ctx = XiContext::for_size(omega, Permutation(w0), lambda.size());
  return mullineux_xi(eta(lambda, std::vector<int>(static_cast<std::size_t>(ell), 1)), ctx);
}

std::vector<SimpleMatch> match_simples(const CellularBasis& a, const CellularBasis& b, unsigned threads) {
  struct Simple {
    Multipartition label;
    std::optional<ModuleRealization> module;
  };
  auto simples_of = [threads](const CellularBasis& basis) {
    return parallel_map(basis.labels().size(), threads, [&](std::size_t i) {
      const CellModule cm = cell_module(basis, basis.labels()[i]);
      Simple s{cm.label, std::nullopt};
      if (simple_dim(cm) > 0) s.module = simple_module(cm);
      return s;
    });
  };
  const auto sa = simples_of(a);
  const auto sb = simples_of(b);

  const auto found = parallel_map(sa.size(), threads, [&](std::size_t i) {
    std::vector<std::pair<std::size_t, std::size_t>> hits;
    if (!sa[i].module) return hits;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (!sb[j].module || sb[j].module->dim != sa[i].module->dim) continue;
      const std::size_t d = intertwiner_dim(*sa[i].module, *sb[j].module);
      if (d > 0) hits.emplace_back(j, d);
    }
    return hits;
  });

  std::vector<SimpleMatch> out;
  std::vector<bool> used(sb.size(), false);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (!sa[i].module) continue;
    if (found[i].size() != 1)
      throw std::logic_error("match_simples: " + std::to_string(found[i].size()) + " matches for " + sa[i].label.to_string());
    const auto [j, d] = found[i].front();
    if (used[j]) throw std::logic_error("match_simples: " + sb[j].label.to_string() + " matched twice");
    used[j] = true;
    out.push_back({sa[i].label, sb[j].label, d});
  }
  for (std::size_t j = 0; j < sb.size(); ++j)
    if (sb[j].module && !used[j]) throw std::logic_error("match_simples: " + sb[j].label.to_string() + " left unmatched");
  return out;
}

}  // namespace hecke
