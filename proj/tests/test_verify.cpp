#include <doctest.h>

#include <cstdlib>

#include "qhl/poly_json.hpp"
#include "qhl/verify.hpp"

using namespace qhl;

TEST_CASE("reports are byte deterministic") {
  VerifyBounds b;
  b.max_outer = 3;
  b.max_outer_sl = 3;
  b.m = 2;
  b.D = 4;
  b.n_max = 2;
  const std::string first = dump_canonical(verify_thm_sg(b).to_json());
  const std::string second = dump_canonical(verify_thm_sg(b).to_json());
  CHECK(first == second);

  // Thread count must not leak into the canonical report.
  setenv("QHL_THREADS", "3", 1);
  const std::string threaded = dump_canonical(verify_thm_sg(b).to_json());
  setenv("QHL_THREADS", "1", 1);
  const std::string serial = dump_canonical(verify_thm_sg(b).to_json());
  unsetenv("QHL_THREADS");
  CHECK(threaded == serial);
  CHECK(threaded == first);
}

TEST_CASE("bounds are refused beyond the documented maxima") {
  VerifyBounds b;
  b.max_outer = 99;
  CHECK_THROWS_WITH_AS(verify_thm_sg(b), doctest::Contains("maximum"), std::invalid_argument);
  VerifyBounds c;
  c.D = 42;
  CHECK_THROWS_AS(verify_thm_sl(c), std::invalid_argument);
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite", VerifyBounds{}), std::invalid_argument);
}

TEST_CASE("selftest passes") {
  VerificationReport rep = selftest(1);
  CHECK(rep.pass());
  CHECK(rep.cases.size() == 4);
}

TEST_CASE("all suites pass at small bounds") {
  VerifyBounds b;
  b.max_outer = 3;
  b.max_outer_sl = 3;
  b.m = 3;
  b.D = 4;
  b.n_max = 2;
  b.mx = 2;
  b.my = 2;
  VerificationReport rep = run_suite("all", b);
  CHECK(rep.pass());
  CHECK(rep.failed_count() == 0);
}
