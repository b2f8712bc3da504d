#include <adnil/enumeration.hpp>
#include <adnil/verify.hpp>

#include <doctest.h>

using namespace adnil;

TEST_CASE("every check passes at small rank") {
  VerifyOptions opts;
  opts.n_max = 6;
  const auto results = run_verification(opts);
  CHECK(results.size() == verification_checks().size());
  for (const CheckResult& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("an injected fault is reported with its first counterexample") {
  VerifyOptions opts;
  opts.n_max = 6;
  opts.only = {"count_agreement"};
  opts.reflection_override = [](int n, int h) { return n == 5 && h == 3 ? BigInt(0) : count_atmost_reflection(n, h); };
  const auto results = run_verification(opts);
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].pass);
  REQUIRE(results[0].counterexample.has_value());
  CHECK(results[0].counterexample->n == 5);
  CHECK(results[0].counterexample->input == "h=3");
  CHECK(results[0].counterexample->got == "reflection 0");
}

TEST_CASE("option validation") {
  VerifyOptions opts;
  opts.n_max = 0;
  CHECK_THROWS_AS(run_verification(opts), std::invalid_argument);
  opts.n_max = kVerifyHardCap + 1;
  CHECK_THROWS_AS(run_verification(opts), std::invalid_argument);
  opts.n_max = 2;
  opts.only = {"no_such_check"};
  CHECK_THROWS_AS(run_verification(opts), std::invalid_argument);
}
