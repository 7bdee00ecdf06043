#include <doctest.h>

#include <cmath>
#include <vector>

#include "hypzeta/coefficients.hpp"
#include "hypzeta/diagnostics.hpp"
#include "hypzeta/errors.hpp"

using namespace hypzeta;

namespace {

const PrecisionContext& ctx128() {
  static const PrecisionContext ctx(128);
  return ctx;
}

const CoeffTable& table200() {
  static const CoeffTable table = CoeffTable::build(200, ctx128());
  return table;
}

BigComplex point(const char* text) { return BigComplex::parse(text, ctx128().working_bits()); }

}  // namespace

TEST_CASE("decay over the printed range") {
  const DecayReport r = decay_report(table200(), 2, 5);
  REQUIRE(r.magnitudes.size() == 4);
  CHECK(r.magnitudes[0].to_fixed(3) == "0.238");
  CHECK(r.magnitudes[2].to_fixed(4) == "0.0721");
  CHECK(r.strictly_decreasing);
  CHECK(r.envelope_monotone);
  CHECK(r.fitted_points == 4);
  CHECK(r.loglog_slope < 0.0);
}

TEST_CASE("decay over a long range") {
  const DecayReport r = decay_report(table200(), 10, 200);
  CHECK(std::isfinite(r.loglog_slope));
  CHECK(r.loglog_slope < 0.0);
  CHECK(r.envelope_monotone);
  for (const BigReal& m : r.magnitudes) CHECK(m.sign() >= 0);
  BigReal running = r.magnitudes.back();
  for (auto it = r.magnitudes.rbegin(); it != r.magnitudes.rend(); ++it) {
    running = max(running, *it);
    CHECK(running <= BigReal(2, 64));
  }
}

TEST_CASE("decay errors") {
  const CoeffTable toy = CoeffTable::build(50, PrecisionContext(64), CoeffRoute::toy);
  CHECK_THROWS_AS(decay_report(toy, 2, 50), DegenerateDataError);
  CHECK_THROWS_AS(decay_report(table200(), 5, 5), RangeError);
  CHECK_THROWS_AS(decay_report(table200(), 1, 5), RangeError);
  CHECK_THROWS_AS(decay_report(table200(), 2, 201), RangeError);
}

TEST_CASE("profile at a truncation point") {
  const std::vector<std::size_t> cps = {1, 2, 4};
  const ConvergenceProfile p = convergence_profile(point("2"), table200(), ctx128(), cps);
  REQUIRE(p.oracle.has_value());
  REQUIRE(p.rows.size() == 3);
  for (const ProfileRow& row : p.rows) {
    REQUIRE(row.error.has_value());
    CHECK(*row.error <= ldexp(BigReal(1, 64), -126));
  }
}

TEST_CASE("profiles shrink and stay within ten tail estimates") {
  const std::vector<std::size_t> cps = {50, 100, 200};
  for (const char* text : {"3", "0", "0.5+2i", "-0.5"}) {
    CAPTURE(text);
    const ConvergenceProfile p = convergence_profile(point(text), table200(), ctx128(), cps);
    REQUIRE(p.oracle.has_value());
    REQUIRE(p.rows.size() == cps.size());
    CHECK(*p.rows.back().error <= *p.rows.front().error);
    for (const ProfileRow& row : p.rows) {
      CHECK(row.terms <= 200);
      CHECK(*row.error <= BigReal(10, 64) * row.tail_estimate + p.oracle->error_bound);
    }
  }
}

TEST_CASE("profile of the entire part at s = 1") {
  const std::vector<std::size_t> cps = {10, 50, 200};
  const ConvergenceProfile p = convergence_profile(point("1"), table200(), ctx128(), cps);
  REQUIRE(p.rows.size() == 3);
  CHECK(*p.rows[2].error < *p.rows[0].error);
}
