#include "hypzeta/coefficients.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypzeta/errors.hpp"
#include "hypzeta/numerics.hpp"
#include "hypzeta/parallel.hpp"

namespace hypzeta {

namespace {

long bit_length(unsigned long v) {
  long n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

// Bits lost to cancellation in sum_j (-1)^j C(k,j)(2j+1) zeta(2j+2): the
// Pascal row contributes up to 2^k, the (2j+1) factor its bit length.
long cancellation_bits(unsigned k) { return static_cast<long>(k) + bit_length(2UL * k + 1); }

// Sums C(k,j) * weight[j] for j = 0..k at precision p, with exact binomials.
// Returns the sum and the number of bits cancelled.
std::pair<BigReal, long> binomial_weighted_sum(unsigned k, const std::vector<BigReal>& weight,
                                               mpfr_prec_t p) {
  BigReal sum(p), term(p);
  BigInt c = 1;
  long max_exp = std::numeric_limits<long>::min();
  for (unsigned j = 0; j <= k; ++j) {
    mpfr_mul_z(term.get(), weight[j].get(), c.get_mpz_t(), MPFR_RNDN);
    if (!term.is_zero()) max_exp = std::max(max_exp, term.exponent());
    sum += term;
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), k - j);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j + 1);
  }
  if (sum.is_zero()) return {sum, p};
  return {sum, std::max(0L, max_exp + bit_length(k + 1UL) - sum.exponent())};
}

BigReal exact_weight_value(unsigned j, const BernoulliCache& bern, mpfr_prec_t p) {
  return BigReal(a_exact_weight(j, bern).value(), p + 8) * pow(pi(p + 8), 2UL * j + 2);
}

void require_cache(unsigned k, const BernoulliCache& bern) {
  if (bern.n_max() < 2 * k + 2) {
    throw RangeError("Bernoulli cache reaches n = " + std::to_string(bern.n_max()) +
                     ", coefficient k = " + std::to_string(k) + " needs " + std::to_string(2 * k + 2));
  }
}

std::vector<BigReal> build_exact_route(unsigned k_max, const PrecisionContext& ctx,
                                       const BernoulliCache& bern) {
  const mpfr_prec_t target = ctx.working_bits();
  constexpr long kMargin = 96;
  // |A_k| itself shrinks, so the observed loss runs past the Pascal-row
  // estimate; the shared weights carry enough slack to absorb that.
  constexpr long kSharedSlack = 256;
  const mpfr_prec_t shared_prec = target + cancellation_bits(k_max) + kSharedSlack;

  std::vector<BigReal> weights(k_max + 1);
  detail::parallel_for(k_max + 1, [&](std::size_t j) {
    weights[j] = BigReal(exact_weight_value(static_cast<unsigned>(j), bern, shared_prec), shared_prec);
  });

  std::vector<BigReal> out(k_max + 1);
  detail::parallel_for(k_max + 1, [&](std::size_t idx) {
    const auto k = static_cast<unsigned>(idx);
    mpfr_prec_t p = target + cancellation_bits(k) + kMargin;
    auto [sum, lost] = binomial_weighted_sum(k, weights, p);
    while (p - lost < target + 8) {
      p = std::max(p + 16, target + lost + 32);
      if (p <= shared_prec) {
        std::tie(sum, lost) = binomial_weighted_sum(k, weights, p);
      } else {
        std::vector<BigReal> local(k + 1);
        for (unsigned j = 0; j <= k; ++j) local[j] = exact_weight_value(j, bern, p);
        std::tie(sum, lost) = binomial_weighted_sum(k, local, p);
      }
    }
    out[idx] = BigReal(sum, target);
  });
  return out;
}

}  // namespace

std::string_view to_string(CoeffRoute route) {
  switch (route) {
    case CoeffRoute::exact:
      return "exact";
    case CoeffRoute::float_sum:
      return "float";
    case CoeffRoute::oracle:
      return "oracle";
    case CoeffRoute::toy:
      return "toy";
  }
  return "unknown";
}

CoeffRoute parse_route(std::string_view text) {
  if (text == "exact") return CoeffRoute::exact;
  if (text == "float") return CoeffRoute::float_sum;
  if (text == "oracle") return CoeffRoute::oracle;
  if (text == "toy") return CoeffRoute::toy;
  throw std::invalid_argument("unknown coefficient route '" + std::string(text) + "'");
}

ExactRational a_exact_weight(unsigned j, const BernoulliCache& bern) {
  // (2)_j (1/2)_j = (j+1)! * (2j)! / (4^j j!) = (j+1) (2j)! / 4^j
  BigInt four_j = 1;
  four_j <<= 2 * j;
  return bern.at(2 * j + 2) * ExactRational(four_j, factorial(2 * j) * (j + 1));
}

PiPolynomial a_exact(unsigned k, const BernoulliCache& bern) {
  require_cache(k, bern);
  PiPolynomial result;
  for (unsigned j = 0; j <= k; ++j) {
    result.add_term(2 * j + 2, ExactRational(binomial(k, j)) * a_exact_weight(j, bern));
  }
  return result;
}

BigReal a_float(unsigned k, const PrecisionContext& ctx, const BernoulliCache& bern) {
  require_cache(k, bern);
  const PrecisionContext wide = ctx.with_extra_guard(k);
  const mpfr_prec_t p = wide.working_bits();
  BigReal sum(p);
  BigReal binom(1, p);
  for (unsigned j = 0; j <= k; ++j) {
    const BigReal zeta = zeta_even_exact(j + 1, bern).evaluate(wide);
    BigReal term = binom * zeta * BigReal(2L * j + 1, p);
    if (j % 2 == 1) term = -term;
    sum += term;
    binom *= BigReal(static_cast<long>(k - j), p);
    binom /= BigReal(static_cast<long>(j + 1), p);
  }
  return BigReal(sum, ctx.working_bits());
}

BigReal a_float(unsigned k, const PrecisionContext& ctx) {
  const BernoulliCache bern(2 * k + 2);
  return a_float(k, ctx, bern);
}

std::vector<BoundedValue> a_oracle_limit_range(unsigned k_max, const PrecisionContext& ctx,
                                               std::uint64_t n_max) {
  if (n_max < 10) throw DomainError("a_oracle_limit requires n_max >= 10");
  const mpfr_prec_t p = ctx.working_bits() + 8;
  const std::size_t width = k_max + 1;

  // Lattice sum over n in fixed-size chunks; chunk partials are combined in
  // chunk order so the result does not depend on the thread count.
  constexpr std::uint64_t kChunk = 1u << 15;
  const std::uint64_t chunks = (n_max + kChunk - 1) / kChunk;
  std::vector<std::vector<BigReal>> partial(chunks);
  detail::parallel_for(chunks, [&](std::size_t c) {
    std::vector<BigReal> acc(width, BigReal(p));
    BigReal y(p), u(p), power(p), factor(p), g(p);
    const std::uint64_t first = c * kChunk + 1;
    const std::uint64_t last = std::min<std::uint64_t>(n_max, first + kChunk - 1);
    for (std::uint64_t n = first; n <= last; ++n) {
      // y = n^-2, u = 1 - y
      mpfr_set_ui(y.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_sqr(y.get(), y.get(), MPFR_RNDN);
      mpfr_ui_div(y.get(), 1, y.get(), MPFR_RNDN);
      mpfr_ui_sub(u.get(), 1, y.get(), MPFR_RNDN);
      acc[0] += y;
      mpfr_set_ui(power.get(), 1, MPFR_RNDN);  // u^(k-1), with 0^0 = 1 at n = 1
      for (unsigned k = 1; k <= k_max; ++k) {
        // g = y u^(k-1) (1 - (2k+1) y)
        mpfr_mul_ui(factor.get(), y.get(), 2UL * k + 1, MPFR_RNDN);
        mpfr_ui_sub(factor.get(), 1, factor.get(), MPFR_RNDN);
        mpfr_mul(g.get(), y.get(), power.get(), MPFR_RNDN);
        mpfr_mul(g.get(), g.get(), factor.get(), MPFR_RNDN);
        mpfr_add(acc[k].get(), acc[k].get(), g.get(), MPFR_RNDN);
        mpfr_mul(power.get(), power.get(), u.get(), MPFR_RNDN);
      }
    }
    partial[c] = std::move(acc);
  });

  std::vector<BoundedValue> out;
  out.reserve(width);
  const BigReal upper(BigReal(static_cast<long>(n_max), p) + BigReal(mpq_class(1, 2), p));
  const BigReal lower(BigReal(static_cast<long>(n_max), p) - BigReal(mpq_class(1, 2), p));
  for (unsigned k = 0; k <= k_max; ++k) {
    BigReal sum(p);
    for (const auto& chunk : partial) sum += chunk[k];

    // g(x) = sum_m c_m x^(-2m), the polynomial y (1-y)^(k-1) (1-(2k+1)y) in y = x^-2.
    std::vector<BigInt> coeff;
    if (k == 0) {
      coeff = {BigInt(0), BigInt(1)};
    } else {
      coeff.assign(k + 2, BigInt(0));
      for (unsigned i = 0; i <= k; ++i) {
        BigInt d = 0;
        if (i <= k - 1) d += (i % 2 == 0 ? 1 : -1) * binomial(k - 1, i);
        if (i >= 1) d += (i % 2 == 1 ? -1 : 1) * BigInt(2 * k + 1) * binomial(k - 1, i - 1);
        coeff[i + 1] = d;
      }
    }

    // Tail: int_{N+1/2}^inf g + g'(N+1/2)/24. With B = (1/24) int_{N-1/2}^inf
    // sum_m |c_m| 2m(2m+1) x^(-2m-2) dx majorizing both the midpoint-rule
    // remainder and the g'' integral, the error is at most 2B.
    BigReal correction(p), bound(p);
    for (unsigned m = 1; m < coeff.size(); ++m) {
      if (coeff[m] == 0) continue;
      const BigReal c(coeff[m], p);
      correction += c / (pow(upper, 2UL * m - 1) * BigReal(2L * m - 1, p));
      correction -= c * BigReal(2L * m, p) / (pow(upper, 2UL * m + 1) * BigReal(24, p));
      bound += BigReal(BigInt(abs(coeff[m]) * m), p) / pow(lower, 2UL * m + 1);
    }
    bound /= BigReal(6, p);

    // Rounding: every term carries about k+6 roundings, and the running sum one
    // per step; |g(n)| <= (2k+2) n^-2 bounds the magnitudes.
    BigReal rounding = ldexp(BigReal(static_cast<long>(n_max + k + 8), p), 2 - p) *
                       BigReal(2L * k + 2, p) * BigReal(2, p);
    bound += rounding;

    BigReal value = sum + correction;
    out.push_back({BigReal(value, ctx.working_bits()), BigReal(bound, 53)});
  }
  return out;
}

BoundedValue a_oracle_limit(unsigned k, const PrecisionContext& ctx, std::uint64_t n_max) {
  auto all = a_oracle_limit_range(k, ctx, n_max);
  return std::move(all.back());
}

BigInt a_toy(unsigned k) {
  BigInt total = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const BigInt term = binomial(k, j) * (2 * j + 1);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigReal table_term(unsigned k, unsigned j, bool with_zeta, const PrecisionContext& ctx) {
  if (j > k) {
    throw RangeError("table_term requires j <= k (k=" + std::to_string(k) + ", j=" + std::to_string(j) + ")");
  }
  BigInt integer = binomial(k, j) * (2 * j + 1);
  if (j % 2 == 1) integer = -integer;
  BigReal value(integer, ctx.working_bits() + 8);
  if (with_zeta) value *= zeta_even_exact(j + 1).evaluate(ctx.with_extra_guard(8));
  return BigReal(value, ctx.working_bits());
}

CoeffTable::CoeffTable(unsigned k_max, const PrecisionContext& ctx, CoeffRoute route,
                       std::shared_ptr<const BernoulliCache> bern)
    : k_max_(k_max), ctx_(ctx), route_(route), bern_(std::move(bern)) {}

CoeffTable CoeffTable::build(unsigned k_max, const PrecisionContext& ctx, CoeffRoute route,
                             std::shared_ptr<const BernoulliCache> bern, std::uint64_t oracle_n_max) {
  if (route != CoeffRoute::toy) {
    if (!bern || bern->n_max() < 2 * k_max + 2) bern = BernoulliCache::for_coefficients(k_max);
  }
  CoeffTable table(k_max, ctx, route, std::move(bern));
  const mpfr_prec_t p = ctx.working_bits();
  table.bounds_.assign(k_max + 1, BigReal(53));

  switch (route) {
    case CoeffRoute::exact:
      table.rounded_ = build_exact_route(k_max, ctx, *table.bern_);
      break;
    case CoeffRoute::float_sum:
      table.rounded_.resize(k_max + 1);
      detail::parallel_for(k_max + 1, [&](std::size_t k) {
        table.rounded_[k] = a_float(static_cast<unsigned>(k), ctx, *table.bern_);
      });
      break;
    case CoeffRoute::oracle: {
      auto values = a_oracle_limit_range(k_max, ctx, oracle_n_max);
      for (auto& v : values) {
        table.rounded_.push_back(std::move(v.value));
      }
      for (unsigned k = 0; k <= k_max; ++k) table.bounds_[k] = values[k].bound;
      break;
    }
    case CoeffRoute::toy:
      for (unsigned k = 0; k <= k_max; ++k) table.rounded_.emplace_back(a_toy(k), p);
      break;
  }
  return table;
}

PiPolynomial CoeffTable::exact(unsigned k) const {
  if (route_ == CoeffRoute::toy) throw std::logic_error("toy coefficients have no pi-polynomial form");
  if (k > k_max_) throw RangeError("coefficient index beyond table");
  return a_exact(k, *bern_);
}

const BernoulliCache& CoeffTable::bernoulli() const {
  if (!bern_) throw std::logic_error("toy coefficient table carries no Bernoulli cache");
  return *bern_;
}

BigReal inverse_binomial_check(const CoeffTable& table, unsigned j) {
  if (j > table.k_max()) throw RangeError("inverse_binomial_check needs k_max >= j");
  const mpfr_prec_t p = table.ctx().working_bits() + j + 16;
  BigReal sum(p), term(p);
  BigInt c = 1;
  for (unsigned k = 0; k <= j; ++k) {
    mpfr_mul_z(term.get(), table.rounded(k).get(), c.get_mpz_t(), MPFR_RNDN);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), j - k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
  return BigReal(sum, table.ctx().working_bits());
}

}  // namespace hypzeta
