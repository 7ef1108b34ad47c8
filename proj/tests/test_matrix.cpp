#include "doctest.h"

#include <stdexcept>

#include "hecke/matrix.hpp"

using namespace hecke;

namespace {

Matrix from_rows(const std::vector<std::vector<int>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("5/1") == Rational(5));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rank, nullspace and inverse") {
  const Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const Matrix k = nullspace(a);
  REQUIRE(k.rows() == 1);
  CHECK((a * k.transpose()).is_zero());
  const Matrix lk = left_nullspace(a);
  REQUIRE(lk.rows() == 1);
  CHECK((lk * a).is_zero());
  CHECK_FALSE(inverse(a).has_value());
  const Matrix b = from_rows({{2, 1}, {1, 1}});
  const auto bi = inverse(b);
  REQUIRE(bi.has_value());
  CHECK(b * *bi == Matrix::identity(2));
  CHECK(independent_rows(a) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("solve_left") {
  const Matrix a = from_rows({{1, 0, 1}, {0, 1, 1}});
  const Matrix b = from_rows({{2, 3, 5}});
  const auto x = solve_left(a, b);
  REQUIRE(x.has_value());
  CHECK(*x * a == b);
  CHECK_FALSE(solve_left(a, from_rows({{1, 0, 0}})).has_value());
}
