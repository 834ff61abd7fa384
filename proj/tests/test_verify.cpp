#include "chromspec/error.h"
#include "chromspec/verify.h"
#include "doctest.h"

using namespace chromspec;

TEST_CASE("families and bounds suites pass") {
  for (const char* suite : {"families", "bounds"}) {
    VerifyOptions o;
    o.suite = suite;
    const VerifyReport r = run_verify(o);
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.passed());
      CHECK(c.cases > 0);
      CHECK(c.suite == suite);
    }
  }
}

TEST_CASE("verify output is deterministic for a seed") {
  VerifyOptions o;
  o.suite = "onesum";
  o.seed = 7;
  o.max_n = 7;
  const std::string a = verify_json(run_verify(o)).dump();
  const std::string b = verify_json(run_verify(o)).dump();
  CHECK(a == b);
  CHECK(run_verify(o).passed());
}

TEST_CASE("verify text lists one line per check") {
  VerifyOptions o;
  o.suite = "families";
  const VerifyReport r = run_verify(o);
  const std::string t = verify_text(r);
  std::size_t lines = 0;
  for (std::size_t p = 0; (p = t.find("PASS", p)) != std::string::npos; ++p) ++lines;
  CHECK(lines == r.checks.size());
  CHECK(t.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify options are validated") {
  VerifyOptions o;
  o.suite = "nope";
  CHECK_THROWS_AS(run_verify(o), Error);
  o.suite = "sharp";
  o.max_n = 2;
  CHECK_THROWS_AS(run_verify(o), Error);
  o.max_n = 17;
  CHECK_THROWS_AS(run_verify(o), Error);
}

TEST_CASE("spectrum_matches explains mismatches") {
  std::string why;
  const Spectrum s({0.0, 1.5, 1.5}, 1e-8);
  CHECK(spectrum_matches(s, ExactSpectrum({{Rational(0), 1}, {ratio(3, 2), 2}}), 1e-8, &why));
  CHECK_FALSE(spectrum_matches(s, ExactSpectrum({{Rational(0), 1}, {ratio(3, 2), 1}, {Rational(1), 1}}), 1e-8, &why));
  CHECK_FALSE(why.empty());
}
