#include "doctest.h"

#include <stdexcept>

#include "hecke/label_maps.hpp"

using namespace hecke;

namespace {

const Permutation kS1 = Permutation::from_one_based({2, 1, 3});

XiContext worked_example() { return XiContext({3, 2, 2}, kS1, 1); }

}  // namespace

TEST_CASE("eta") {
  const Multipartition l{{2, 1}, {3}};
  CHECK(eta(l, {0, 0}) == l);
  CHECK(eta(l, {1, 0}) == Multipartition{{2, 1}, {3}});
  CHECK(eta(l, {0, 1}) == Multipartition{{2, 1}, {1, 1, 1}});
  CHECK(eta(Multipartition{{4}}, {1}) == Multipartition{{1, 1, 1, 1}});
  for (const auto& m : enumerate_multipartitions(2, 3))
    for (const std::vector<int>& c : {std::vector<int>{0, 1}, {1, 0}, {1, 1}}) CHECK(eta(eta(m, c), c) == m);
  CHECK_THROWS_AS(eta(l, {0}), std::invalid_argument);
}

TEST_CASE("XiContext validation") {
  CHECK_THROWS_AS(XiContext({0, 1}, Permutation::identity(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(XiContext({1, 0}, Permutation::identity(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(XiContext({1, 0}, Permutation::identity(2), 1), std::invalid_argument);
  CHECK(worked_example().heights() == std::vector<int>{3, 2, 2});
  CHECK(XiContext::for_size({1, 0}, Permutation::identity(2), 3).heights() == std::vector<int>{4, 3});
  CHECK_THROWS_AS(ColumnStrictTableau({{1, 2}}), std::invalid_argument);
}

TEST_CASE("base tableaux") {
  const XiContext ctx = worked_example();
  CHECK(base_tableau(ctx) == ColumnStrictTableau({{2, 1}, {3, 2, 1}, {2, 1}}));
  CHECK(base_tableau(ctx.untwisted()) == ColumnStrictTableau({{3, 2, 1}, {2, 1}, {2, 1}}));
  CHECK(gamma_word(base_tableau(ctx)) == std::vector<int>{2, 1, 3, 2, 1, 2, 1});
  CHECK(lambda_of_A(base_tableau(ctx), ctx) == Multipartition::empty(3));
  CHECK(is_standard(base_tableau(ctx), ctx));
  CHECK(r_map(base_tableau(ctx), ctx) == base_tableau(ctx.untwisted()));
  CHECK(gamma_word(ColumnStrictTableau({{5, 4, 3, 2, 1}})) == std::vector<int>{5, 4, 3, 2, 1});
}

TEST_CASE("worked example") {
  const XiContext ctx = worked_example();
  const ColumnStrictTableau a({{3, 1}, {4, 3, 1}, {3, 1}});
  CHECK(gamma_word(a) == std::vector<int>{3, 1, 4, 3, 1, 3, 1});
  CHECK(is_standard(a, ctx));
  CHECK(lambda_of_A(a, ctx) == Multipartition{{1}, {1, 1}, {1}});
  CHECK(A_of_lambda(Multipartition{{1}, {1, 1}, {1}}, ctx) == a);
  const ColumnStrictTableau ra = r_map(a, ctx);
  CHECK(ra == ColumnStrictTableau({{4, 3, 1}, {3, 1}, {3, 1}}));
  CHECK(lambda_of_A(ra, ctx.untwisted()) == Multipartition{{1, 1}, {1}, {1}});
  CHECK(mullineux_xi(Multipartition{{1}, {1, 1}, {1}}, ctx) == Multipartition{{1, 1}, {1}, {1}});
  const ColumnStrictTableau b({{3, 1}, {4, 3, 2}, {2, 1}});
  CHECK_FALSE(is_standard(b, ctx));
  CHECK_THROWS_AS(r_map(b, ctx), std::invalid_argument);
  CHECK(mullineux_xi(Multipartition::empty(3), ctx) == Multipartition::empty(3));
}

TEST_CASE("lambda_of_A and A_of_lambda are inverse") {
  const XiContext ctx = XiContext::for_size({2, 1, 0}, Permutation::from_one_based({3, 1, 2}), 3);
  for (const auto& l : enumerate_multipartitions(3, 3)) CHECK(lambda_of_A(A_of_lambda(l, ctx), ctx) == l);
  const XiContext tight({1, 0}, Permutation::identity(2), 0);
  CHECK_THROWS_AS(A_of_lambda(Multipartition{{1}, {1, 1}}, tight), std::invalid_argument);
  CHECK_THROWS_AS(lambda_of_A(ColumnStrictTableau({{2, 0}, {1}}), tight), std::invalid_argument);
}

TEST_CASE("R is the identity for xi = 1") {
  for (int r = 0; r <= 3; ++r)
    for (const auto& omega : {std::vector<long>{1, 0}, std::vector<long>{0, 0}, std::vector<long>{2, 1, 0}}) {
      const int ell = static_cast<int>(omega.size());
      const XiContext ctx = XiContext::for_size(omega, Permutation::identity(ell), r);
      for (const auto& l : enumerate_multipartitions(ell, r)) {
        const ColumnStrictTableau a = A_of_lambda(l, ctx);
        if (is_standard(a, ctx)) CHECK(r_map(a, ctx) == a);
      }
    }
}

TEST_CASE("R lands in standard tableaux and preserves size") {
  const Permutation s1 = Permutation::from_one_based({2, 1});
  for (int r = 1; r <= 4; ++r) {
    const XiContext ctx = XiContext::for_size({1, 0}, s1, r);
    for (const auto& l : enumerate_multipartitions(2, r))
      if (auto mu = mullineux_xi(l, ctx)) {
        CHECK(mu->size() == r);
        CHECK(is_standard(A_of_lambda(*mu, ctx.untwisted()), ctx.untwisted()));
      }
  }
}

TEST_CASE("mullineux_xi does not depend on the base point") {
  const Permutation s1 = Permutation::from_one_based({2, 1});
  for (int r = 1; r <= 3; ++r) {
    const XiContext ref = XiContext::for_size({1, 0}, s1, r);
    for (long shift = 1; shift <= 3; ++shift) {
      const XiContext lower({1, 0}, s1, ref.lo() - shift);
      for (const auto& l : enumerate_multipartitions(2, r)) CHECK(mullineux_xi(l, lower) == mullineux_xi(l, ref));
    }
  }
}

TEST_CASE("generalized Mullineux") {
  for (int r = 0; r <= 4; ++r)
    for (const auto& p : enumerate_partitions(r)) CHECK(generalized_mullineux(Multipartition({p}), {0}) == Multipartition({p.conjugate()}));
  CHECK(generalized_mullineux(Multipartition::empty(2), {1, 0}) == Multipartition::empty(2));
  CHECK_THROWS_AS(generalized_mullineux(Multipartition::empty(2), {0, 1}), std::invalid_argument);
}

TEST_CASE("match_simples") {
  const auto alg = HeckeAlgebra::create(2, 2, {0, 1});
  const CellularBasis m0(alg, BasisFamily::M({0, 0}));
  for (const auto& e : match_simples(m0, m0, 2)) {
    CHECK(e.from == e.to);
    CHECK(e.intertwiners == 1);
  }
  const CellularBasis m11(alg, BasisFamily::M({1, 1}));
  const auto serial = match_simples(m0, m11, 1);
  const auto parallel = match_simples(m0, m11, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].from == parallel[i].from);
    CHECK(serial[i].to == parallel[i].to);
    CHECK(serial[i].to == eta(serial[i].from, {1, 1}));
  }
}
