#include <doctest.h>

#include "thetawpo/errors.hpp"
#include "thetawpo/verify.hpp"

using namespace thetawpo;

namespace {

SuiteParams small(std::size_t size, std::size_t samples = 200) {
  SuiteParams p;
  p.size = size;
  p.samples = samples;
  p.seed = 7;
  return p;
}

}  // namespace

TEST_CASE("suite registry") {
  const std::vector<std::string>& names = suite_names();
  CHECK(names.size() == 12);
  CHECK(names.front() == "order-axioms");
  CHECK(names.back() == "fixtures");
  CHECK_THROWS_AS(run_suite("no-such-suite"), DomainError);
}

TEST_CASE("small suites pass") {
  struct Case {
    const char* name;
    std::size_t size;
  };
  for (Case c : {Case{"order-axioms", 2}, Case{"theta-criterion", 2}, Case{"coeff-lemmas", 3}, Case{"g-monotone", 3},
                 Case{"encode-monotone", 3}, Case{"higman-oracle", 3}, Case{"tleq-fixpoint", 3}, Case{"gap-oracle", 4},
                 Case{"iso", 5}, Case{"quasi-embedding", 2}, Case{"xstarstar-cases", 4}, Case{"fixtures", 0}}) {
    CAPTURE(c.name);
    SuiteReport r = run_suite(c.name, small(c.size));
    CHECK(r.checked > 0);
    CHECK(r.passed());
  }
}

TEST_CASE("report formats") {
  SuiteReport r = run_suite("iso", small(4));
  nlohmann::ordered_json j = to_json(r);
  CHECK(j["suite"] == "iso");
  CHECK(j["params"]["size"] == 4);
  CHECK(j["checked"] == r.checked);
  CHECK(j["failures"].empty());
  CHECK(to_text(r).rfind("iso", 0) == 0);
}

TEST_CASE("seeded suites are reproducible") {
  SuiteReport a = run_suite("coeff-lemmas", small(3, 100));
  SuiteReport b = run_suite("coeff-lemmas", small(3, 100));
  CHECK(to_json(a) == to_json(b));
}
