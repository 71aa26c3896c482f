#include <doctest.h>

#include "verify.hpp"

using namespace kdyck;

TEST_CASE("stock verification passes every suite") {
  const VerifyReport report = run_verification(3, 6, 20);
  CHECK(report.all_passed());
  CHECK(report.suites.size() == 12);
  for (const auto& suite : report.suites) {
    CAPTURE(suite.name);
    CHECK(suite.passed);
    CHECK(suite.detail.empty());
  }
}

TEST_CASE("minimal sweep passes") { CHECK(run_verification(1, 1, 1).all_passed()); }

TEST_CASE("each injected fault is caught with a counterexample") {
  for (Fault fault : {Fault::generalized_binomial, Fault::shifted_count, Fault::dropped_term}) {
    CAPTURE(fault_name(fault));
    const VerifyReport report = run_verification(2, 4, 12, fault);
    CHECK_FALSE(report.all_passed());
    bool counterexample_seen = false;
    for (const auto& suite : report.suites) {
      if (!suite.passed) {
        CHECK(suite.detail.find("counterexample") != std::string::npos);
        CHECK(suite.detail.find("k=") != std::string::npos);
        counterexample_seen = true;
      }
    }
    CHECK(counterexample_seen);
  }
}

TEST_CASE("the wrong binomial convention fails at a j=0 boundary cell") {
  const VerifyReport report = run_verification(1, 2, 8, Fault::generalized_binomial);
  bool found = false;
  for (const auto& suite : report.suites) {
    if (suite.name == "three-route-counts") {
      CHECK_FALSE(suite.passed);
      CHECK(suite.detail.find("j=0") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("suite order is deterministic") {
  const VerifyReport a = run_verification(2, 3, 10);
  const VerifyReport b = run_verification(2, 3, 10);
  REQUIRE(a.suites.size() == b.suites.size());
  for (std::size_t i = 0; i < a.suites.size(); ++i) CHECK(a.suites[i].name == b.suites[i].name);
}

TEST_CASE("bounds outside the guard limits are rejected") {
  CHECK_THROWS_AS(run_verification(7, 6, 20), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(3, 11, 20), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(3, 6, 201), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(0, 6, 20), std::invalid_argument);
}

TEST_CASE("fault names round-trip") {
  for (Fault fault :
       {Fault::none, Fault::generalized_binomial, Fault::shifted_count, Fault::dropped_term}) {
    CHECK(fault_from_name(fault_name(fault)) == fault);
  }
  CHECK_FALSE(fault_from_name("no-such-fault").has_value());
}
