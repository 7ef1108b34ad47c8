#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"

namespace hecke {

class HeckeAlgebra;

/// A finite-dimensional right H_{ell,r}-module given by generator matrices.
/// Vectors are rows: v . s_i = v * s[i], v . x_k = v * x[k].
struct ModuleRealization {
  std::size_t dim = 0;
  std::vector<Matrix> s;  // s_1 .. s_{r-1}
  std::vector<Matrix> x;  // x_1 .. x_r
};

/// Name of the first defining relation violated by the matrices, or nullopt.
std::optional<std::string> check_module_relations(const ModuleRealization& m, const std::vector<long>& omega);

/// Dimension of Hom(A, B): matrices T with rho_A(g) T = T rho_B(g) for g in {s_1..s_{r-1}, x_1}.
std::size_t intertwiner_dim(const ModuleRealization& a, const ModuleRealization& b);

/// The dual space with (f h)(m) = f(m h*). Every generator is *-fixed, so the
/// action matrices are transposed.
ModuleRealization contragredient(const ModuleRealization& m);

/// Joint generalized eigenvalues of the commuting x_1..x_r with multiplicities.
/// Candidates are searched in [lo, hi]; throws std::domain_error if the found
/// multiplicities do not exhaust the module (a non-integral eigenvalue).
std::map<std::vector<long>, std::size_t> block_of(const ModuleRealization& m, long lo, long hi);

/// block_of with the candidate range the residues of H_{ell,r} can reach.
std::map<std::vector<long>, std::size_t> block_of(const ModuleRealization& m, const std::vector<long>& omega);

/// The weight alpha = sum_k alpha_{i_k} of a residue vector, as a map residue -> count.
std::map<long, int> block_weight(const std::vector<long>& residues);

}  // namespace hecke
