#include "hypzeta/numerics.hpp"

#include <algorithm>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

constexpr mpfr_prec_t kPowGuard = 24;

}  // namespace

BigReal pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal pi(const PrecisionContext& ctx) { return pi(ctx.working_bits()); }

BigReal rational_to_real(const ExactRational& q, mpfr_prec_t bits) { return BigReal(q.value(), bits); }

BigReal rational_to_real(const ExactRational& q, const PrecisionContext& ctx) {
  return rational_to_real(q, ctx.working_bits());
}

BigComplex complex_pow_real_base(const BigReal& x, const BigComplex& w, const PrecisionContext& ctx) {
  if (!(x.sign() > 0)) throw DomainError("complex_pow_real_base: base must be positive");
  const mpfr_prec_t p = ctx.working_bits();
  if (w.im.is_zero()) return BigComplex(pow(BigReal(x, p), BigReal(w.re, p)));

  // exp(w ln x) with the exponent formed at extra precision; the absolute
  // error of w ln x scales with its magnitude, so the guard grows with it.
  const BigReal ln_x = abs(log(BigReal(x, p + kPowGuard)));
  const BigReal w_mag = max(abs(w.re), abs(w.im)) * ln_x;
  const long extra = w_mag.is_zero() ? 0 : std::max(0L, w_mag.exponent());
  const mpfr_prec_t wp = p + kPowGuard + extra;
  const BigReal ln_x_w = log(BigReal(x, wp));
  const BigReal modulus = exp(BigReal(w.re, wp) * ln_x_w);
  const BigReal phase = BigReal(w.im, wp) * ln_x_w;
  return {BigReal(modulus * cos(phase), p), BigReal(modulus * sin(phase), p)};
}

}  // namespace hypzeta
