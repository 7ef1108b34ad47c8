#include "doctest.h"

#include <stdexcept>

#include "hecke/verify.hpp"

using namespace hecke;

TEST_CASE("twists") {
  CHECK(all_twists(2) == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(all_twists(1).size() == 2);
}

TEST_CASE("every suite passes at (2,2)") {
  const auto alg = HeckeAlgebra::create(2, 2, {1, 0});
  VerifyOptions opts;
  opts.threads = 2;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteResult res = run_suite(name, alg, opts);
    CHECK(res.name == name);
    CHECK(res.pass);
    CHECK(res.counterexample.empty());
    CHECK_FALSE(res.details.empty());
  }
  CHECK_THROWS_AS(run_suite("nope", alg, opts), std::invalid_argument);
}

TEST_CASE("main2 is skipped for increasing omega") {
  const auto alg = HeckeAlgebra::create(2, 2, {0, 1});
  const SuiteResult res = run_suite("main2", alg, VerifyOptions{});
  CHECK(res.skipped);
  CHECK(res.pass);
  CHECK_FALSE(run_suite("main1", alg, VerifyOptions{}).skipped);
}

TEST_CASE("suites at level three") {
  const auto alg = HeckeAlgebra::create(3, 2, {2, 1, 1});
  VerifyOptions opts;
  opts.threads = 2;
  for (const auto& name : {"relations", "trace", "main1", "main2", "duality"}) {
    CAPTURE(name);
    CHECK(run_suite(name, alg, opts).pass);
  }
}

TEST_CASE("thread count does not change results") {
  const auto alg = HeckeAlgebra::create(2, 3, {0, 1});
  VerifyOptions one;
  VerifyOptions many;
  many.threads = 4;
  CHECK(verify_trace(*alg, one).details == verify_trace(*alg, many).details);
  CHECK(verify_main1(alg, one).details == verify_main1(alg, many).details);
}
