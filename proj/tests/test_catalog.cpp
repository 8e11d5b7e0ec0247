#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "quadnorm/catalog.hpp"

using namespace quadnorm;

TEST_CASE("catalog names load") {
  auto names = catalog_names();
  CHECK(names == std::vector<std::string>{"freecomm-abc", "freecomm-ab", "free-x", "sign", "ab5"});
  for (auto const& n : names) {
    CHECK(load(n).name == n);
  }
  CHECK_THROWS_AS(load("plactic"), std::invalid_argument);
}

TEST_CASE("catalog entries") {
  auto fc = load("freecomm-abc");
  CHECK(fc.map.alphabet()->has_neutral());
  CHECK(fc.expected_class == std::pair<std::size_t, std::size_t>{3, 3});
  REQUIRE(fc.oracle);
  CHECK(fc.oracle->ev(Word::parse(fc.map.alphabet(), "b a e c"))
        == fc.oracle->ev(Word::parse(fc.map.alphabet(), "a c b")));

  auto sign = load("sign");
  CHECK(sign.map.alphabet()->neutral() == sign.map.alphabet()->find("0"));
  REQUIRE(sign.oracle);
  CHECK(sign.oracle->ev(Word::parse(sign.map.alphabet(), "+1 -1 -1")) == MonoidOracle::value_type{-1});
  CHECK(sign.map == oracle::build(sign.map.alphabet(), oracle::sign_pair));
  CHECK_FALSE(sign.expected.at("stable212"));
  CHECK_FALSE(sign.expected.at("domino"));

  auto ab5 = load("ab5");
  CHECK(ab5.expected_class == std::pair<std::size_t, std::size_t>{5, 4});
  CHECK_FALSE(ab5.expected.at("weak-domino"));
  CHECK_FALSE(ab5.expected.at("local-factorability"));
}

TEST_CASE("run_all reproduces every expectation") {
  for (auto const& n : catalog_names()) {
    CAPTURE(n);
    auto reports = run_all(load(n));
    CHECK(reports.size() > 1);
    CHECK(reports.front().name == "expect-class");
    for (auto const& r : reports) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("run_all reports a wrong expectation as a failure") {
  auto entry               = load("sign");
  entry.expected["domino"] = true;
  entry.expected_class     = {5, 4};
  bool class_failed = false, domino_failed = false;
  for (auto const& r : run_all(entry)) {
    class_failed |= r.name == "expect-class" && !r.passed;
    domino_failed |= r.name == "expect-domino" && !r.passed;
  }
  CHECK(class_failed);
  CHECK(domino_failed);
}
