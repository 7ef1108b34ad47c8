#include "doctest.h"

#include <stdexcept>

#include "hecke/cellular.hpp"
#include "hecke/serialization.hpp"

using namespace hecke;

namespace {

ConfigErrorCode code_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.code();
  }
  FAIL("config accepted: " << text);
  return ConfigErrorCode::InvalidValue;
}

}  // namespace

TEST_CASE("valid configs") {
  const JobConfig cfg = parse_config(R"({"ell":2,"r":3,"omega":[0,1],"c":[0,1]})");
  CHECK(cfg.ell == 2);
  CHECK(cfg.r == 3);
  CHECK(cfg.omega == std::vector<long>{0, 1});
  CHECK(cfg.c == std::vector<int>{0, 1});
  CHECK(cfg.xi == Permutation::identity(2));
  const JobConfig full = parse_config(
      R"({"ell":2,"r":2,"omega":[1,0],"xi":[2,1],"family":"mxi:2,1","familyA":"m","familyB":"n:1,0","lambda":[[1],[1]],"format":"csv","threads":3})");
  CHECK(full.xi == Permutation::from_one_based({2, 1}));
  CHECK(full.lambda == Multipartition{{1}, {1}});
  CHECK(full.threads == 3);
  CHECK(parse_config(config_to_json(full).dump()) == full);
}

TEST_CASE("config errors carry distinct codes and paths") {
  CHECK(code_of(R"({"ell":2,"r":3,"omega":[0,1,2]})") == ConfigErrorCode::LengthMismatch);
  CHECK(code_of(R"({"ell":2,"r":3,"omega":[0,1],"xi":[2,2]})") == ConfigErrorCode::NotAPermutation);
  CHECK(code_of(R"({"ell":2,"r":3,"omega":[0,1],"colour":1})") == ConfigErrorCode::UnknownField);
  CHECK(code_of(R"({"ell":2,"omega":[0,1]})") == ConfigErrorCode::MissingField);
  CHECK(code_of(R"({"ell":"2","r":3,"omega":[0,1]})") == ConfigErrorCode::TypeError);
  CHECK(code_of(R"({"ell":2,"r":3,"omega":[0,1)") == ConfigErrorCode::ParseError);
  CHECK(code_of(R"({"ell":2,"r":0,"omega":[0,1]})") == ConfigErrorCode::InvalidValue);
  CHECK(code_of(R"({"ell":2,"r":1,"omega":[0,1],"c":[0,2]})") == ConfigErrorCode::InvalidValue);
  CHECK(code_of(R"({"ell":2,"r":1,"omega":[0,1],"format":"xml"})") == ConfigErrorCode::InvalidValue);
  try {
    parse_config(R"({"ell":2,"r":3,"omega":[0,"a"]})");
    FAIL("accepted");
  } catch (const ConfigError& e) {
    CHECK(e.path() == "/omega/1");
    CHECK(to_string(e.code()) == "TYPE_ERROR");
  }
  CHECK(to_string(ConfigErrorCode::LengthMismatch) == "LENGTH_MISMATCH");
  CHECK(to_string(ConfigErrorCode::NotAPermutation) == "NOT_A_PERMUTATION");
}

TEST_CASE("combinatorial objects round trip") {
  const Multipartition m{{3, 2}, {3, 1}};
  CHECK(to_json(m).dump() == "[[3,2],[3,1]]");
  CHECK(multipartition_from_json(to_json(m)) == m);
  CHECK(to_json(Multipartition::empty(2)).dump() == "[[],[]]");
  CHECK(parse_multipartition("[[2],[1]]", 2) == Multipartition{{2}, {1}});
  CHECK_THROWS_AS(parse_multipartition("[[2],[1]]", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_multipartition("[[1,2]]", 1), std::invalid_argument);
  for (const auto& t : standard_tableaux(Multipartition{{2, 1}, {1}})) CHECK(tableau_from_json(to_json(t)) == t);
  const ColumnStrictTableau a({{3, 1}, {4, 3, 1}, {3, 1}});
  CHECK(to_json(a).dump() == "[[3,1],[4,3,1],[3,1]]");
  CHECK(column_tableau_from_json(to_json(a)) == a);
  const ZeroOneTuple v(Window{-1, 2}, {{1, 0, 1, 0}, {0, 1, 1, 0}});
  CHECK(zero_one_tuple_from_json(to_json(v)) == v);
}

TEST_CASE("matrices and elements round trip with exact rationals") {
  Matrix m(2, 2);
  m(0, 0) = Rational(1, 3);
  m(0, 1) = -2;
  m(1, 1) = Rational(7, 2);
  CHECK(to_json(m).dump() == R"([["1/3","-2"],["0","7/2"]])");
  CHECK(matrix_from_json(to_json(m)) == m);
  const auto alg = HeckeAlgebra::create(2, 3, {0, 1});
  const Element h = Rational(-1, 2) * alg->s(0) * alg->x(1) + alg->x(2) * alg->x(2);
  CHECK(element_from_json(*alg, to_json(h)) == h);
  const Element one = alg->one();
  CHECK(to_json(one).dump() == R"([{"a":[0,0,0],"w":[1,2,3],"coef":"1"}])");
}

TEST_CASE("tables") {
  CHECK(simples_csv({}) == "lambda,family,dim_S,dim_D,block\n");
  const std::vector<SimplesRow> rows{{Multipartition{{1}, {}}, "m:0,0", 1, 1, {{0, 1}}},
                                     {Multipartition{{}, {1}}, "m:0,0", 1, 0, {{-1, 1}, {1, 2}}}};
  CHECK(simples_csv(rows) == "lambda,family,dim_S,dim_D,block\n\"[[1],[]]\",m:0,0,1,1,0:1\n\"[[],[1]]\",m:0,0,1,0,-1:1;1:2\n");
  CHECK(simples_jsonl(rows) ==
        "{\"lambda\":[[1],[]],\"family\":\"m:0,0\",\"dim_S\":1,\"dim_D\":1,\"block\":\"0:1\"}\n"
        "{\"lambda\":[[],[1]],\"family\":\"m:0,0\",\"dim_S\":1,\"dim_D\":0,\"block\":\"-1:1;1:2\"}\n");
  const std::vector<SimpleMatch> table{{Multipartition{{1}, {}}, Multipartition{{}, {1}}, 1}};
  CHECK(match_table_json(table).dump() == R"([{"from":[[1],[]],"to":[[],[1]],"certified":true}])");
  const auto back = match_table_from_json(match_table_json(table));
  REQUIRE(back.size() == 1);
  CHECK(back[0].from == table[0].from);
  CHECK(back[0].to == table[0].to);
  CHECK(back[0].intertwiners == 1);
}

TEST_CASE("DOT export uses sequential ids") {
  const auto comp = component_of_empty({0, 1}, 2);
  const std::string dot = crystal_dot(comp, {0, 0});
  CHECK(dot == crystal_dot(component_of_empty({0, 1}, 2), {0, 0}));
  CHECK(dot.rfind("digraph crystal {\n  0 [label=\"[[],[]]\"];\n", 0) == 0);
  CHECK(dot.find("  " + std::to_string(comp.vertices.size() - 1) + " [label=") != std::string::npos);
  CHECK(dot.find(" -> ") != std::string::npos);
}
