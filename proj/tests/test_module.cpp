#include "doctest.h"

#include <stdexcept>

#include "hecke/cellular.hpp"
#include "hecke/module.hpp"

using namespace hecke;

TEST_CASE("contragredient and intertwiners") {
  const auto alg = HeckeAlgebra::create(2, 2, {0, 5});
  const CellularBasis basis(alg, BasisFamily::M({0, 0}));
  const auto labels = basis.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const CellModule a = cell_module(basis, labels[i]);
    CHECK_FALSE(check_module_relations(contragredient(a.action), alg->omega()).has_value());
    // Semisimple: cell modules are simple, self-dual and pairwise distinct.
    CHECK(intertwiner_dim(contragredient(a.action), a.action) == 1);
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (j != i) CHECK(intertwiner_dim(a.action, cell_module(basis, labels[j]).action) == 0);
  }
}

TEST_CASE("blocks from generalized eigenvalues") {
  const auto alg = HeckeAlgebra::create(2, 2, {0, 1});
  const CellularBasis basis(alg, BasisFamily::M({0, 0}));
  for (const auto& lambda : basis.labels()) {
    const CellModule cm = cell_module(basis, lambda);
    const auto blocks = block_of(cm.action, alg->omega());
    std::size_t total = 0;
    for (const auto& [eig, mult] : blocks) {
      CHECK(block_weight(eig) == block_weight(blocks.begin()->first));
      total += mult;
    }
    CHECK(total == cm.action.dim);
    CHECK(block_weight(residue_sequence(row_reading_tableau(lambda), alg->omega())) == block_weight(blocks.begin()->first));
  }
}

TEST_CASE("module relation checker catches a bad module") {
  ModuleRealization m;
  m.dim = 1;
  Matrix one = Matrix::identity(1);
  m.s.push_back(one);
  m.x.push_back(one);
  m.x.push_back(one);
  CHECK(check_module_relations(m, {1, 2}).has_value());
}
