#include "hypzeta/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hypzeta/bernoulli.hpp"
#include "hypzeta/errors.hpp"
#include "hypzeta/numerics.hpp"

namespace hypzeta {

namespace {

constexpr mpfr_prec_t kBoundBits = 53;

long bit_length(std::size_t v) {
  long n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

bool is_nonpositive_integer(const BigComplex& z) {
  return z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0;
}

BigReal two_pow(long e) { return ldexp(BigReal(1, kBoundBits), e); }

BigComplex one_minus(const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  return {BigReal(1, p) - z.re, -z.im};
}

// 1 - 2^(1-s)
BigComplex eta_factor(const BigComplex& s, const PrecisionContext& ctx) {
  const BigComplex w = one_minus(s);
  const BigComplex two_pow_w = complex_pow_real_base(BigReal(2, ctx.working_bits()), w, ctx);
  return {BigReal(1, ctx.working_bits()) - two_pow_w.re, -two_pow_w.im};
}

}  // namespace

std::string_view to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::dirichlet:
      return "dirichlet";
    case OracleMethod::eta:
      return "eta";
    case OracleMethod::functional_equation:
      return "functional-equation";
    case OracleMethod::bernoulli:
      return "bernoulli";
  }
  return "unknown";
}

std::string_view to_string(Rigor r) { return r == Rigor::rigorous ? "rigorous" : "heuristic"; }

OracleResult dirichlet_oracle(const BigComplex& s_in, std::size_t n_terms, const PrecisionContext& ctx) {
  if (!(s_in.re > BigReal(1, kBoundBits))) throw DomainError("dirichlet_oracle requires Re s > 1");
  if (n_terms < 10) throw DomainError("dirichlet_oracle requires n_terms >= 10");

  const PrecisionContext wide = ctx.with_extra_guard(16 + static_cast<unsigned>(bit_length(n_terms)));
  const mpfr_prec_t p = wide.working_bits();
  const BigComplex s = s_in.rounded(p);
  const BigComplex minus_s = -s;

  BigComplex sum(p);
  for (std::size_t m = 1; m < n_terms; ++m) {
    sum += complex_pow_real_base(BigReal(static_cast<long>(m), p), minus_s, wide);
  }

  const BigReal n(static_cast<long>(n_terms), p);
  const BigComplex n_pow_minus_s = complex_pow_real_base(n, minus_s, wide);
  BigComplex s_minus_one = s;
  s_minus_one.re -= BigReal(1, p);
  // N^(1-s)/(s-1) + N^-s/2 + s N^(-s-1)/12
  sum += (n_pow_minus_s * n) / s_minus_one;
  sum += n_pow_minus_s / BigReal(2, p);
  sum += (n_pow_minus_s * s) / (n * BigReal(12, p));

  // First omitted correction: B_4/4! s(s+1)(s+2) N^(-s-3). For complex s the
  // integral remainder picks up |s+3| / (Re s + 3).
  const BigReal sigma(s.re, kBoundBits);
  BigComplex rising = s.rounded(kBoundBits);
  for (long i = 1; i <= 2; ++i) {
    BigComplex next = s.rounded(kBoundBits);
    next.re += BigReal(i, kBoundBits);
    rising *= next;
  }
  BigReal bound = abs(rising) / BigReal(720, kBoundBits) *
                  pow(BigReal(n, kBoundBits), -(sigma + BigReal(3, kBoundBits)));
  const bool real = s.is_real();
  if (!real) {
    BigComplex s3 = s.rounded(kBoundBits);
    s3.re += BigReal(3, kBoundBits);
    bound *= abs(s3) / (sigma + BigReal(3, kBoundBits));
  }
  // Rounding of the partial sum: sum |m^-s| <= zeta(sigma) <= sigma / (sigma - 1).
  const BigReal magnitude = sigma / (sigma - BigReal(1, kBoundBits));
  bound += BigReal(static_cast<long>(n_terms) * 8, kBoundBits) * magnitude * two_pow(-p);

  return {sum.rounded(ctx.working_bits()), bound, real ? Rigor::rigorous : Rigor::heuristic,
          OracleMethod::dirichlet};
}

std::size_t dirichlet_terms_for(const BigComplex& s, const PrecisionContext& ctx, std::size_t cap) {
  const double sigma = s.re.to_double();
  const double mag = std::abs(s.re.to_double()) + std::abs(s.im.to_double()) + 3.0;
  // |s(s+1)(s+2)(s+3)|/720 N^-(sigma+3) < 2^-target
  const double log_c = 4.0 * std::log(mag) - std::log(720.0);
  const double log_n = (ctx.target_bits() * std::log(2.0) + log_c) / (sigma + 3.0);
  const double n = std::ceil(std::exp(std::min(log_n, 60.0)));
  return std::clamp<std::size_t>(static_cast<std::size_t>(n), 10, std::max<std::size_t>(cap, 10));
}

OracleResult eta_oracle(const BigComplex& s_in, const PrecisionContext& ctx) {
  if (!(s_in.re.sign() > 0)) throw DomainError("eta_oracle requires Re s > 0");
  const BigComplex factor = eta_factor(s_in, ctx);
  const BigReal factor_abs(abs(factor), kBoundBits);
  if (factor_abs < two_pow(-static_cast<long>(ctx.target_bits() / 2))) {
    throw ConditioningError("eta_oracle: 1 - 2^(1-s) too close to zero");
  }

  const double t = std::abs(s_in.im.to_double());
  const double sigma = s_in.re.to_double();
  const double log_rate = std::log(3.0 + std::sqrt(8.0));
  // Truncation: 3 (1 + 2|t|) e^(pi |t| / 2) / (3 + sqrt 8)^n
  const double log_prefix = std::log(3.0 * (1.0 + 2.0 * t)) + M_PI * t / 2.0;
  const long n = static_cast<long>(
      std::ceil((static_cast<double>(ctx.working_bits()) * std::log(2.0) + log_prefix) / log_rate)) + 1;
  const long cancel_bits = static_cast<long>(std::ceil(M_PI * t / 2.0 / std::log(2.0)));
  const PrecisionContext wide =
      ctx.with_extra_guard(static_cast<unsigned>(16 + cancel_bits + bit_length(static_cast<std::size_t>(n))));
  const mpfr_prec_t p = wide.working_bits();

  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), exactly.
  std::vector<mpq_class> d(static_cast<std::size_t>(n) + 1);
  mpq_class term(1);
  mpq_class acc(0);
  for (long i = 0; i <= n; ++i) {
    acc += term;
    d[static_cast<std::size_t>(i)] = acc;
    term *= mpq_class(mpz_class(4 * (n + i) * (n - i)), mpz_class((2 * i + 1) * (2 * i + 2)));
    term.canonicalize();
  }

  const BigComplex s = s_in.rounded(p);
  const BigComplex minus_s = -s;
  const BigReal dn(d.back(), p);
  BigComplex sum(p);
  for (long k = 0; k < n; ++k) {
    const BigReal weight(mpq_class(d[static_cast<std::size_t>(k)] - d.back()), p);
    BigComplex value = complex_pow_real_base(BigReal(k + 1, p), minus_s, wide) * weight;
    if (k % 2 == 0) {
      sum += value;
    } else {
      sum -= value;
    }
  }
  BigComplex eta = -(sum / dn);
  BigComplex zeta = eta / factor.rounded(p);

  BigReal truncation = BigReal::from_double(std::exp(log_prefix - static_cast<double>(n) * log_rate), kBoundBits);
  if (sigma < 0.5) truncation *= BigReal(2, kBoundBits);
  const BigReal rounding = BigReal(8 * (n + 1), kBoundBits) * two_pow(cancel_bits - p);
  const BigReal bound = (truncation + rounding) / factor_abs;
  return {zeta.rounded(ctx.working_bits()), bound,
          (s_in.is_real() && sigma >= 0.5) ? Rigor::rigorous : Rigor::heuristic, OracleMethod::eta};
}

BigComplex log_gamma(const BigComplex& z_in, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(z_in)) throw DomainError("log_gamma: pole at non-positive integer");

  const mpfr_prec_t target = ctx.working_bits();
  const long z_bits = std::max(0L, abs(z_in).exponent());
  const mpfr_prec_t p = target + 24 + z_bits;
  const BigComplex z = z_in.rounded(p);

  // Shift until Re w >= R, where Stirling's smallest term falls below 2^-p.
  const double radius = 0.12 * static_cast<double>(p) + 4.0;
  const double re = z.re.to_double();
  const long shift = re >= radius ? 0 : static_cast<long>(std::ceil(radius - re));

  BigComplex w = z;
  w.re += BigReal(shift, p);
  BigComplex correction(p);
  for (long i = 0; i < shift; ++i) {
    BigComplex zi = z;
    zi.re += BigReal(i, p);
    correction += log(zi);
  }

  // (w - 1/2) log w - w + log(2 pi)/2 + sum_j B_2j / (2j (2j-1) w^(2j-1))
  const BigComplex log_w = log(w);
  BigComplex w_half = w;
  w_half.re -= BigReal(mpq_class(1, 2), p);
  BigComplex result = w_half * log_w - w;
  result.re += log(BigReal(2, p) * pi(p)) / BigReal(2, p);

  const unsigned max_terms = static_cast<unsigned>(std::ceil(M_PI * radius)) + 8;
  const auto bern = bernoulli_tangent_table(2 * max_terms);
  const BigComplex w_sq = w * w;
  BigComplex w_pow = w;  // w^(2j-1)
  const BigReal threshold = ldexp(BigReal(1, kBoundBits), -static_cast<long>(p));
  for (unsigned j = 1; j <= max_terms; ++j) {
    const ExactRational coeff = bern[2 * j] / ExactRational(static_cast<long>(2 * j * (2 * j - 1)));
    BigComplex term = BigComplex(BigReal(coeff.value(), p)) / w_pow;
    result += term;
    if (BigReal(abs(term), kBoundBits) < threshold) break;
    w_pow *= w_sq;
  }
  result -= correction;
  return result.rounded(target);
}

BigReal functional_equation_residual(const BigComplex& s_in, const PrecisionContext& ctx) {
  const BigReal zero(kBoundBits), one(1, kBoundBits);
  if (!(s_in.re > zero && s_in.re < one)) {
    throw DomainError("functional_equation_residual requires 0 < Re s < 1");
  }
  const PrecisionContext wide = ctx.with_extra_guard(8);
  const mpfr_prec_t p = wide.working_bits();
  const BigComplex s = s_in.rounded(p);
  const BigComplex one_minus_s = one_minus(s);

  const BigComplex half_pi_s = s * BigComplex(ldexp(pi(p), -1));
  const BigComplex sine = sin(half_pi_s);
  const BigReal limit = two_pow(-static_cast<long>(ctx.target_bits() / 2));
  if (BigReal(abs(sine), kBoundBits) < limit) {
    throw ConditioningError("functional_equation_residual: sin(pi s / 2) vanishes");
  }

  const OracleResult left = eta_oracle(s, wide);
  if (BigReal(abs(left.value), kBoundBits) < limit) {
    throw ConditioningError("functional_equation_residual: zeta(s) too close to zero");
  }
  const OracleResult right = eta_oracle(one_minus_s, wide);

  BigComplex s_minus_one = s;
  s_minus_one.re -= BigReal(1, p);
  BigComplex rhs = complex_pow_real_base(BigReal(2, p), s, wide);
  rhs *= complex_pow_real_base(pi(p), s_minus_one, wide);
  rhs *= sine;
  rhs *= exp(log_gamma(one_minus_s, wide));
  rhs *= right.value;

  const BigComplex diff = left.value - rhs;
  return BigReal(abs(diff) / abs(left.value), kBoundBits);
}

OracleResult reflection_oracle(const BigComplex& s_in, const PrecisionContext& ctx) {
  if (s_in.re.sign() > 0) throw DomainError("reflection_oracle requires Re s <= 0");
  if (is_nonpositive_integer(s_in)) {
    throw ConditioningError("reflection_oracle: use the exact value at non-positive integers");
  }
  const PrecisionContext wide = ctx.with_extra_guard(8);
  const mpfr_prec_t p = wide.working_bits();
  const BigComplex s = s_in.rounded(p);
  const BigComplex one_minus_s = one_minus(s);
  const OracleResult mirror = eta_oracle(one_minus_s, wide);

  BigComplex s_minus_one = s;
  s_minus_one.re -= BigReal(1, p);
  BigComplex chi = complex_pow_real_base(BigReal(2, p), s, wide);
  chi *= complex_pow_real_base(pi(p), s_minus_one, wide);
  chi *= sin(s * BigComplex(ldexp(pi(p), -1)));
  chi *= exp(log_gamma(one_minus_s, wide));

  const BigComplex value = chi * mirror.value;
  const BigReal chi_abs(abs(chi), kBoundBits);
  const BigReal bound = chi_abs * mirror.error_bound +
                        BigReal(abs(value), kBoundBits) * two_pow(8 - static_cast<long>(ctx.working_bits()));
  return {value.rounded(ctx.working_bits()), bound, Rigor::heuristic, OracleMethod::functional_equation};
}

OracleResult nonpositive_integer_oracle(unsigned n, const PrecisionContext& ctx) {
  const auto bern = bernoulli_tangent_table(n + 1);
  ExactRational exact = bern[n + 1] / ExactRational(static_cast<long>(n + 1));
  if (n % 2 == 1) exact = -exact;
  const BigReal value = rational_to_real(exact, ctx);
  const BigReal bound = value.is_zero() ? BigReal(kBoundBits)
                                        : BigReal(abs(value), kBoundBits) *
                                              two_pow(-static_cast<long>(ctx.working_bits()));
  return {BigComplex(value), bound, Rigor::rigorous, OracleMethod::bernoulli};
}

std::optional<OracleResult> best_oracle(const BigComplex& s, const PrecisionContext& ctx,
                                        bool series_free_only) {
  const BigReal one(1, kBoundBits);
  if (s.im.is_zero() && s.re == one) return std::nullopt;
  if (!series_free_only && is_nonpositive_integer(s)) {
    return nonpositive_integer_oracle(static_cast<unsigned>(-mpfr_get_si(s.re.get(), MPFR_RNDN)), ctx);
  }

  std::vector<OracleResult> candidates;
  if (s.re > one) {
    constexpr std::size_t kDirichletCap = 20000;
    candidates.push_back(dirichlet_oracle(s, dirichlet_terms_for(s, ctx, kDirichletCap), ctx));
  }
  try {
    if (s.re.sign() > 0) {
      candidates.push_back(eta_oracle(s, ctx));
    } else if (!series_free_only) {
      candidates.push_back(reflection_oracle(s, ctx));
    }
  } catch (const ConditioningError&) {
  }
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const OracleResult& a, const OracleResult& b) {
                             return a.error_bound < b.error_bound;
                           });
}

}  // namespace hypzeta
