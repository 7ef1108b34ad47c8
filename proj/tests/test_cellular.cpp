#include "doctest.h"

#include <stdexcept>

#include "hecke/cellular.hpp"

using namespace hecke;

TEST_CASE("family names round trip") {
  for (const auto& text : {"m:0,1", "n:1,1", "mxi:2,1", "nxi:1,2"}) CHECK(BasisFamily::parse(text, 2).to_string() == text);
  CHECK(BasisFamily::parse("m", 2) == BasisFamily::M({0, 0}));
  CHECK(BasisFamily::parse("nxi", 3) == BasisFamily::NXi(Permutation::identity(3)));
  CHECK_THROWS_AS(BasisFamily::parse("q:0,1", 2), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::parse("m:0", 2), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::parse("mxi:1,1", 2), std::invalid_argument);
}

TEST_CASE("the paired family reverses the twist") {
  CHECK(BasisFamily::M({0, 1}).dual() == BasisFamily::N({1, 0}));
  CHECK(BasisFamily::N({1, 1}).dual() == BasisFamily::M({1, 1}));
  const Permutation s1 = Permutation::from_one_based({2, 1});
  CHECK(BasisFamily::MXi(s1).dual() == BasisFamily::NXi(s1));
  CHECK(BasisFamily::M({0, 1}).dual().dual() == BasisFamily::M({0, 1}));
}

TEST_CASE("twisted omega") {
  const Permutation s1 = Permutation::from_one_based({2, 1});
  CHECK(twisted_omega(BasisFamily::MXi(s1), {1, 0}) == std::vector<long>{0, 1});
  CHECK(twisted_omega(BasisFamily::M({0, 1}), {1, 0}) == std::vector<long>{1, 0});
}

TEST_CASE("cellular bases at (2,2)") {
  const auto alg = HeckeAlgebra::create(2, 2, {0, 1});
  for (const auto& fam : {BasisFamily::M({0, 0}), BasisFamily::M({1, 0}), BasisFamily::N({0, 1}), BasisFamily::N({1, 1}),
                          BasisFamily::MXi(Permutation::from_one_based({2, 1})), BasisFamily::NXi(Permutation::identity(2))}) {
    CAPTURE(fam.to_string());
    const CellularBasis basis(alg, fam);
    CHECK(basis.size() == alg->dimension());
    CHECK_FALSE(check_star_symmetry(basis).has_value());
    CHECK_FALSE(check_cell_action(basis).has_value());
    for (const auto& lambda : basis.labels()) {
      const Matrix g = gram_matrix(basis, lambda);
      CHECK(g.is_symmetric());
      CHECK(g == gram_matrix_by_trace(basis, lambda));
      const CellModule cm = cell_module(basis, lambda);
      CHECK_FALSE(check_module_relations(cm.action, alg->omega()).has_value());
    }
  }
}

TEST_CASE("expansion in the cellular basis") {
  const auto alg = HeckeAlgebra::create(2, 2, {0, 1});
  const CellularBasis basis(alg, BasisFamily::M({0, 1}));
  const auto coords = basis.expand(basis.element(1, 0, 0));
  for (std::size_t i = 0; i < coords.size(); ++i) CHECK(coords[i] == (i == basis.index(1, 0, 0) ? 1 : 0));
}

TEST_CASE("symmetric group in characteristic zero") {
  const auto alg = HeckeAlgebra::create(1, 3, {0});
  const CellularBasis basis(alg, BasisFamily::M({0}));
  std::size_t squares = 0;
  for (const auto& lambda : basis.labels()) {
    const CellModule cm = cell_module(basis, lambda);
    CHECK(simple_dim(cm) == cm.basis.size());
    squares += cm.basis.size() * cm.basis.size();
  }
  CHECK(squares == 6);
}

TEST_CASE("tau_hat(z w^-1) = 1 and the subcell model") {
  const auto alg = HeckeAlgebra::create(2, 2, {0, 1});
  for (const std::vector<int>& c : {std::vector<int>{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    const CellularBasis paired(alg, BasisFamily::M(c).dual());
    for (const auto& lambda : enumerate_multipartitions(2, 2)) {
      CHECK(alg->tau_hat(z_lambda(*alg, c, lambda) * alg->from_permutation(w_lambda(lambda).inverse())) == 1);
      const ModuleRealization sub = subcell_module(*alg, c, lambda);
      CHECK(intertwiner_dim(sub, cell_module(paired, conjugate(lambda)).action) == 1);
    }
  }
}

TEST_CASE("simple modules satisfy the relations") {
  const auto alg = HeckeAlgebra::create(2, 3, {0, 1});
  const CellularBasis basis(alg, BasisFamily::M({0, 0}));
  std::size_t nonzero = 0;
  for (const auto& lambda : basis.labels()) {
    const CellModule cm = cell_module(basis, lambda);
    if (simple_dim(cm) == 0) {
      CHECK_THROWS_AS(simple_module(cm), std::invalid_argument);
      continue;
    }
    ++nonzero;
    const ModuleRealization d = simple_module(cm);
    CHECK(d.dim == simple_dim(cm));
    CHECK_FALSE(check_module_relations(d, alg->omega()).has_value());
    CHECK(intertwiner_dim(d, d) == 1);
  }
  CHECK(nonzero == 8);
}
