#include "doctest.h"

#include <stdexcept>

#include <set>

#include "hecke/cellular.hpp"
#include "hecke/crystal.hpp"
#include "hecke/label_maps.hpp"

using namespace hecke;

namespace {

// Residue of the unique box in mu but not in lambda (c0 picture), or nullopt.
std::optional<long> added_residue(const Multipartition& lambda, const Multipartition& mu, const std::vector<long>& omega) {
  std::optional<long> res;
  int added = 0;
  for (int k = 0; k < lambda.ell(); ++k) {
    const int rows = std::max(lambda[k].length(), mu[k].length());
    for (int i = 0; i < rows; ++i) {
      const int d = mu[k][i] - lambda[k][i];
      if (d < 0) return std::nullopt;
      if (d == 1) res = omega[static_cast<std::size_t>(k)] + lambda[k][i] - i;
      added += d;
    }
  }
  if (added != 1) return std::nullopt;
  return res;
}

const std::vector<std::vector<long>> kOmegas{{0, 1}, {0, 0}, {1, 0}, {0, 2}, {0, 1, 1}};

}  // namespace

TEST_CASE("one-factor crystal") {
  const ZeroOneTuple v(Window{0, 1}, {{1, 0}});
  const auto f = crystal_f(v, 0);
  REQUIRE(f.has_value());
  CHECK(f->bits()[0] == std::vector<std::uint8_t>{0, 1});
  CHECK_FALSE(crystal_f(*f, 0).has_value());
  CHECK(crystal_e(*f, 0) == v);
  CHECK_THROWS_AS(crystal_f(v, 1), std::out_of_range);
}

TEST_CASE("signature rule on two factors") {
  // Factors (1,0) and (0,1) at j = 0: '+' then '-' cancel in one reading order only.
  const ZeroOneTuple v(Window{0, 1}, {{1, 0}, {0, 1}});
  CHECK_FALSE(crystal_f(v, 0, Orientation::Forward).has_value());
  const auto f = crystal_f(v, 0, Orientation::Reverse);
  REQUIRE(f.has_value());
  CHECK(f->bits()[0] == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("crystal axioms on components") {
  for (const auto& omega : kOmegas)
    for (const Orientation o : {Orientation::Forward, Orientation::Reverse}) {
      const auto comp = component_of_empty(omega, 3, o);
      const std::set<ZeroOneTuple> members(comp.vertices.begin(), comp.vertices.end());
      const std::vector<int> c0(omega.size(), 0);
      for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
        const auto& v = comp.vertices[i];
        CHECK(gamma(v, c0).size() == comp.depth[i]);
        for (long j = comp.window.lo; j < comp.window.hi; ++j) {
          if (auto f = crystal_f(v, j, o)) {
            CHECK(crystal_e(*f, j, o) == v);
            CHECK(added_residue(gamma(v, c0), gamma(*f, c0), omega) == j);
          }
          if (auto e = crystal_e(v, j, o)) {
            CHECK(crystal_f(*e, j, o) == v);
            CHECK(members.count(*e) == 1);
          }
        }
      }
    }
}

TEST_CASE("empty label") {
  const ZeroOneTuple e = empty_label({0}, Window{0, 3});
  CHECK(e.ones(0) == std::vector<long>{0});
  CHECK(gamma(e, {0}) == Multipartition::empty(1));
  CHECK(gamma(e, {1}) == Multipartition::empty(1));
  const Window w = default_window({0, 1}, 2);
  CHECK(gamma(empty_label({0, 1}, w), {0, 0}) == Multipartition::empty(2));
  CHECK(gamma(empty_label({0, 1}, w), {1, 0}) == Multipartition::empty(2));
  CHECK_THROWS_AS(empty_label({0, 1}, Window{1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(empty_label(Window{0, 1}, {3}), std::invalid_argument);
}

TEST_CASE("default window bounds") {
  const Window w = default_window({0, 1}, 3);
  const auto n = heights_from_omega({0, 1}, w.lo);
  CHECK(w.size() >= 2 * *std::max_element(n.begin(), n.end()));
  CHECK(w.size() >= 1 - w.lo + 1 + 3);
  CHECK(*std::min_element(n.begin(), n.end()) >= 3);
}

TEST_CASE("one row against one column") {
  // Moving the top one of the empty label up n times gives (n) in the c = 0 reading.
  const int n = 4;
  const Window w{0, 2 * n};
  ZeroOneTuple v = empty_label(w, {n});
  for (int k = 0; k < n; ++k) v = *crystal_f(v, n - 1 + k);
  CHECK(gamma(v, {0}) == Multipartition{{n}});
  CHECK(gamma(v, {1}) == Multipartition{{1, 1, 1, 1}});
}

TEST_CASE("gamma with a twist is eta of the c0 reading") {
  for (const auto& omega : kOmegas) {
    const auto comp = component_of_empty(omega, 3);
    const std::vector<int> c0(omega.size(), 0);
    for (unsigned mask = 0; mask < (1u << omega.size()); ++mask) {
      std::vector<int> c;
      for (std::size_t i = 0; i < omega.size(); ++i) c.push_back((mask >> i) & 1u);
      for (const auto& v : comp.vertices) CHECK(gamma(v, c) == eta(gamma(v, c0), c));
    }
  }
}

TEST_CASE("gamma is injective on the component") {
  for (const auto& omega : kOmegas) {
    const auto comp = component_of_empty(omega, 3);
    std::set<Multipartition> images;
    for (const auto& v : comp.vertices) images.insert(gamma(v, std::vector<int>(omega.size(), 0)));
    CHECK(images.size() == comp.vertices.size());
  }
}

TEST_CASE("enlarging the window does not change the labels") {
  for (const auto& omega : kOmegas)
    for (int r = 1; r <= 3; ++r) {
      const Window w = default_window(omega, r);
      const auto base = nonzero_labels(omega, r);
      for (long extra = 1; extra <= 3; ++extra) {
        CHECK(nonzero_labels(omega, r, kDefaultOrientation, Window{w.lo - extra, w.hi}) == base);
        CHECK(nonzero_labels(omega, r, kDefaultOrientation, Window{w.lo, w.hi + extra}) == base);
        CHECK(nonzero_labels(omega, r, kDefaultOrientation, Window{w.lo - extra, w.hi + 2 * extra}) == base);
      }
    }
}

TEST_CASE("level one: every partition") {
  for (int r = 0; r <= 3; ++r) CHECK(nonzero_labels({0}, r).size() == enumerate_partitions(r).size());
  CHECK(component_of_empty({0}, 0).vertices.size() == 1);
  CHECK(component_of_empty({0}, 3).vertices.size() == 1 + 1 + 2 + 3);
}

TEST_CASE("nonzero labels in small cases") {
  const auto one = nonzero_labels({0, 0}, 1);
  REQUIRE(one.size() == 1);
  CHECK((one[0] == Multipartition{{1}, {}} || one[0] == Multipartition{{}, {1}}));
  CHECK(nonzero_labels({0, 5}, 2) == enumerate_multipartitions(2, 2));
}

TEST_CASE("crystal labels agree with Gram ranks") {
  for (const auto& omega : {std::vector<long>{0, 1}, std::vector<long>{0, 0}, std::vector<long>{2, 0}})
    for (int r = 1; r <= 3; ++r) {
      const auto alg = HeckeAlgebra::create(2, r, omega);
      const CellularBasis basis(alg, BasisFamily::M({0, 0}));
      std::vector<Multipartition> by_gram;
      for (const auto& l : basis.labels())
        if (simple_dim(cell_module(basis, l)) > 0) by_gram.push_back(l);
      CHECK(nonzero_labels(omega, r) == by_gram);
    }
}
