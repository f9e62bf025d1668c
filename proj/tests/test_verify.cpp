#include <doctest.h>

#include "helpers.hpp"
#include "parind/error.hpp"
#include "parind/verify.hpp"

using namespace parind;

TEST_CASE("suite order is fixed") {
  CHECK(suite_names() == std::vector<std::string>{"roots", "cosets", "dw_dim", "cocycle", "kilmoyer", "claim",
                                                  "complex", "steinberg", "heights"});
}

TEST_CASE("all suites pass on small data") {
  for (const auto& t : testing_util::small_types())
    for (const auto& d : testing_util::weightings(t)) {
      CAPTURE(t);
      WeylGroup W(testing_util::datum(t, d, 2, 7));
      auto results = run_suites(W, "all");
      REQUIRE(results.size() == suite_names().size());
      for (std::size_t k = 0; k < results.size(); ++k) {
        CAPTURE(results[k].name);
        CHECK(results[k].name == suite_names()[k]);
        CHECK(results[k].ok);
        CHECK(results[k].checks > 0);
        CHECK(!results[k].counterexample);
      }
    }
}

TEST_CASE("single suites and unknown names") {
  WeylGroup W(RootDatum::of_type("A2"));
  auto r = run_suites(W, "complex");
  REQUIRE(r.size() == 1);
  CHECK(r[0].name == "complex");
  CHECK_THROWS_AS(run_suites(W, "nonsense"), InputError);
}
