#include "doctest.h"
#include "helpers.hpp"
#include "tbt/errors.hpp"
#include "tbt/suites.hpp"

using namespace tbt;

TEST_CASE("worked examples reproduce") {
  const SuiteResult r = run_worked_examples(SuiteOptions{});
  INFO(r.report.dump(2));
  CHECK(r.ok);
}

TEST_CASE("property suite") {
  SuiteOptions o;
  o.random_codes = 10;
  const SuiteResult r = run_properties(o);
  INFO(r.report.dump(2));
  CHECK(r.ok);
}

TEST_CASE("kv suite is deterministic and independent of the worker count") {
  SuiteOptions o;
  o.random_codes = 6;
  o.max_length = 6;
  const SuiteResult a = run_suite("kv-conjecture", o);
  const SuiteResult b = run_suite("kv-conjecture", o);
  o.jobs = 2;
  const SuiteResult c = run_suite("kv-conjecture", o);
  CHECK(a.ok);
  CHECK(a.report == b.report);
  CHECK(a.report == c.report);
}

TEST_CASE("suite names") {
  CHECK(run_suite("examples", SuiteOptions{}).suite == run_suite("paper-examples", SuiteOptions{}).suite);
  CHECK_THROWS_AS(run_suite("bogus", SuiteOptions{}), Error);
}

TEST_CASE("random corpus contract") {
  const auto a = random_corpus(9, 12, 8);
  CHECK(a == random_corpus(9, 12, 8));
  CHECK(a.size() == 12);
  for (const auto& c : a) {
    CHECK(c.length() >= 3);
    CHECK(c.length() <= 8);
    CHECK(c.dimension() > 0);
    CHECK(c.dimension() < c.length());
    CHECK(c.has_full_support());
    CHECK(c.dual_has_full_support());
  }
}
