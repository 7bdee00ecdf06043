#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hypzeta/bernoulli.hpp"
#include "hypzeta/coefficients.hpp"
#include "hypzeta/errors.hpp"
#include "hypzeta/oracles.hpp"
#include "hypzeta/series.hpp"

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

TEST_CASE("term recurrence matches the direct product") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  const mpfr_prec_t p = ctx128().working_bits();
  for (int trial = 0; trial < 20; ++trial) {
    const BigComplex s(BigReal::from_double(dist(rng), p), BigReal::from_double(dist(rng), p));
    TermGenerator gen(s, p);
    CHECK(gen.current() == BigComplex(1, p));
    BigComplex product(1, p);
    const BigComplex a = BigComplex(1, p) - s / BigReal(2, p);
    for (unsigned k = 1; k <= 10; ++k) {
      product *= a + BigComplex(static_cast<long>(k - 1), p);
      product /= BigReal(static_cast<long>(k), p);
      gen.advance();
      CHECK(gen.index() == k);
      const BigReal scale = max(abs(product), BigReal(1, 64));
      CHECK(abs(gen.current() - product) <= ldexp(scale, 2 - static_cast<long>(ctx128().target_bits())));
    }
  }
}

TEST_CASE("terms vanish at positive even integers") {
  const mpfr_prec_t p = ctx128().working_bits();
  TermGenerator gen(BigComplex(6, p), p);
  for (int k = 0; k < 3; ++k) {
    CHECK_FALSE(gen.exhausted());
    gen.advance();
  }
  CHECK(gen.exhausted());

  const auto six = term_sequence(BigComplex(6, p), 10, table200(), ctx128());
  CHECK(std::count_if(six.begin(), six.end(), [](const BigComplex& t) { return !t.is_zero(); }) == 3);
  const auto zero = term_sequence(BigComplex(0, p), 5, table200(), ctx128());
  for (unsigned k = 0; k <= 5; ++k) CHECK(zero[k].re == table200().rounded(k));
  CHECK_THROWS_AS(term_sequence(BigComplex(0, p), 201, table200(), ctx128()), RangeError);
}

TEST_CASE("truncation at even integers") {
  for (const long s : {2L, 4L, 6L, 8L}) {
    CAPTURE(s);
    const EvalResult r = eval_zeta(BigComplex(s, ctx128().working_bits()), table200(), ctx128());
    CHECK(r.terms_used == static_cast<std::size_t>(s / 2));
    CHECK(r.tail_estimate.is_zero());
    CHECK(r.value.im.is_zero());
    CHECK(ulp_distance(r.value.re, zeta_even_exact(s / 2).evaluate(ctx128()), 128) <= 8.0);
    CHECK(r.warnings.empty());
  }
  const EvalResult four = eval_P(BigComplex(4, ctx128().working_bits()), table200(), ctx128());
  CHECK(ulp_distance(four.value.re, table200().rounded(0) - table200().rounded(1), 128) <= 1.0);
}

TEST_CASE("entire part at s = 1 and the pole") {
  const BigComplex one = point("1");
  const EvalResult p1 = eval_P(one, table200(), ctx128());
  CHECK(abs(p1.value - BigComplex(1, 64)) <= p1.tail_estimate);
  CHECK_THROWS_AS(eval_zeta(one, table200(), ctx128()), PoleError);

  const EvalResult near = eval_zeta(point("1.000000000000000000000000001"), table200(), ctx128());
  CHECK(near.has_warning(Warning::near_pole));
  CHECK(to_string(Warning::near_pole) == "near-pole");
}

TEST_CASE("classical values within tail estimates") {
  const EvalResult z0 = eval_zeta(point("0"), table200(), ctx128());
  CHECK(abs(z0.value - BigComplex(BigReal::parse("-0.5", 64))) <= z0.tail_estimate);
  CHECK(z0.terms_used <= ctx128().max_terms());

  const EvalResult z2 = eval_zeta(point("-2"), table200(), ctx128());
  CHECK(abs(z2.value) <= max(z2.tail_estimate, ldexp(BigReal(1, 64), -64)));
  const EvalResult z4 = eval_zeta(point("-4"), table200(), ctx128());
  CHECK(abs(z4.value) <= max(z4.tail_estimate, ldexp(BigReal(1, 64), -64)));
}

TEST_CASE("cap reached is reported") {
  const PrecisionContext capped = ctx128().with_max_terms(20);
  const EvalResult r = eval_zeta(point("0.5+3i"), table200(), capped);
  CHECK(r.terms_used == 20);
  CHECK(r.has_warning(Warning::cap_reached));
  CHECK(r.tail_estimate.sign() > 0);
}

TEST_CASE("agreement with oracles and stopping-rule soundness") {
  for (const char* text : {"1.5", "2.5+5i", "3", "5.5-2i", "0.5+2i", "-1", "-3", "-0.5+1i", "0.3"}) {
    CAPTURE(text);
    const BigComplex s = point(text);
    const auto oracle = best_oracle(s, ctx128());
    REQUIRE(oracle.has_value());
    const EvalResult r = eval_zeta(s, table200(), ctx128());
    const BigReal diff = abs(r.value - oracle->value);
    CHECK(diff <= r.tail_estimate + oracle->error_bound + ldexp(BigReal(1, 64), -120));
    CHECK(diff <= BigReal(10, 64) * r.tail_estimate + oracle->error_bound + ldexp(BigReal(1, 64), -120));
  }
  const BigComplex s = point("2.5+1i");
  const EvalResult r = eval_zeta(s, table200(), ctx128());
  const OracleResult d = dirichlet_oracle(s, dirichlet_terms_for(s, ctx128(), 20000), ctx128());
  CHECK(abs(r.value - d.value) <= r.tail_estimate + d.error_bound);
}

TEST_CASE("partial sums at checkpoints") {
  const std::vector<std::size_t> cps = {1, 10, 100};
  const auto sums = partial_sums_P(point("0"), table200(), ctx128(), cps);
  REQUIRE(sums.size() == 3);
  CHECK(sums[0].value.re == table200().rounded(0));
  CHECK(sums[1].terms == 10);
  const std::vector<std::size_t> bad = {10, 5};
  CHECK_THROWS_AS(partial_sums_P(point("0"), table200(), ctx128(), bad), std::invalid_argument);
  const std::vector<std::size_t> far = {500};
  CHECK_THROWS_AS(partial_sums_P(point("0"), table200(), ctx128(), far), RangeError);
}
