#include "hecke/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

namespace {

Matrix scalar_shift(const Matrix& a, const Rational& c) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) -= c;
  return out;
}

}  // namespace

std::optional<std::string> check_module_relations(const ModuleRealization& m, const std::vector<long>& omega) {
  const std::size_t r = m.x.size();
  const Matrix id = Matrix::identity(m.dim);
  if (m.s.size() + 1 != r && !(r == 0 && m.s.empty())) return "generator count";
  for (std::size_t i = 0; i + 1 < r; ++i) {
    const Matrix& si = m.s[i];
    if (si * si != id) return "s_" + std::to_string(i + 1) + "^2 = 1";
    for (std::size_t j = i + 1; j + 1 < r; ++j) {
      const Matrix& sj = m.s[j];
      if (j == i + 1) {
        if (si * sj * si != sj * si * sj) return "braid s_" + std::to_string(i + 1);
      } else if (si * sj != sj * si) {
        return "s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) + " commute";
      }
    }
    for (std::size_t j = 0; j < r; ++j) {
      const Matrix& xj = m.x[j];
      if (j == i) {
        if (si * xj != m.x[i + 1] * si - id) return "s_i x_i = x_{i+1} s_i - 1 at i=" + std::to_string(i + 1);
      } else if (j == i + 1) {
        if (si * xj != m.x[i] * si + id) return "s_i x_{i+1} = x_i s_i + 1 at i=" + std::to_string(i + 1);
      } else if (si * xj != xj * si) {
        return "s_" + std::to_string(i + 1) + " x_" + std::to_string(j + 1) + " commute";
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (m.x[i] * m.x[j] != m.x[j] * m.x[i]) return "x_" + std::to_string(i + 1) + " x_" + std::to_string(j + 1) + " commute";
  if (r > 0) {
    Matrix f = id;
    for (long w : omega) f = f * scalar_shift(m.x[0], Rational(w));
    if (!f.is_zero()) return "f(x_1) = 0";
  }
  return std::nullopt;
}

std::size_t intertwiner_dim(const ModuleRealization& a, const ModuleRealization& b) {
  const std::size_t n = a.dim;
  const std::size_t m = b.dim;
  if (n == 0 || m == 0) return 0;
  if (a.x.size() != b.x.size()) throw std::invalid_argument("intertwiner_dim: modules over different algebras");
  std::vector<std::pair<const Matrix*, const Matrix*>> gens;
  for (std::size_t i = 0; i < a.s.size(); ++i) gens.emplace_back(&a.s[i], &b.s[i]);
  gens.emplace_back(&a.x[0], &b.x[0]);

  // Unknown T(p, q) at column p * m + q; one equation per generator and entry (i, j) of
  // rho_A T - T rho_B.
  Matrix eq(gens.size() * n * m, n * m);
  std::size_t row = 0;
  for (const auto& [ga, gb] : gens) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j, ++row) {
        for (std::size_t p = 0; p < n; ++p)
          if ((*ga)(i, p) != 0) eq(row, p * m + j) += (*ga)(i, p);
        for (std::size_t q = 0; q < m; ++q)
          if ((*gb)(q, j) != 0) eq(row, i * m + q) -= (*gb)(q, j);
      }
  }
  return n * m - rank(eq);
}

ModuleRealization contragredient(const ModuleRealization& m) {
  ModuleRealization out;
  out.dim = m.dim;
  for (const auto& g : m.s) out.s.push_back(g.transpose());
  for (const auto& g : m.x) out.x.push_back(g.transpose());
  return out;
}

std::map<std::vector<long>, std::size_t> block_of(const ModuleRealization& m, long lo, long hi) {
  std::map<std::vector<long>, std::size_t> out;
  if (m.dim == 0) return out;
  struct Piece {
    std::vector<long> label;
    Matrix basis;  // rows span an invariant subspace
  };
  std::vector<Piece> pieces{{{}, Matrix::identity(m.dim)}};
  for (std::size_t k = 0; k < m.x.size(); ++k) {
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      const std::size_t d = piece.basis.rows();
      // Restriction of x_k to the piece: basis * x_k = y * basis.
      const auto y = solve_left(piece.basis, piece.basis * m.x[k]);
      if (!y) throw std::logic_error("block_of: subspace not invariant under x_k");
      std::size_t found = 0;
      for (long i = lo; i <= hi && found < d; ++i) {
        const Matrix shifted = scalar_shift(*y, Rational(i));
        Matrix power = Matrix::identity(d);
        for (std::size_t e = 0; e < d; ++e) power = power * shifted;
        const Matrix kernel = left_nullspace(power);
        if (kernel.rows() == 0) continue;
        found += kernel.rows();
        Piece p{piece.label, kernel * piece.basis};
        p.label.push_back(i);
        next.push_back(std::move(p));
      }
      if (found != d) throw std::domain_error("block_of: generalized eigenvalue outside the integral candidate range");
    }
    pieces = std::move(next);
  }
  for (const auto& p : pieces) out[p.label] += p.basis.rows();
  return out;
}

std::map<std::vector<long>, std::size_t> block_of(const ModuleRealization& m, const std::vector<long>& omega) {
  if (omega.empty()) throw std::invalid_argument("block_of: empty omega");
  const long r = static_cast<long>(m.x.size());
  const long lo = *std::min_element(omega.begin(), omega.end()) - r;
  const long hi = *std::max_element(omega.begin(), omega.end()) + r;
  return block_of(m, lo, hi);
}

std::map<long, int> block_weight(const std::vector<long>& residues) {
  std::map<long, int> w;
  for (long i : residues) ++w[i];
  return w;
}

}  // namespace hecke
