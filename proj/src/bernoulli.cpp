#include "hypzeta/bernoulli.hpp"

#include <string>

#include "hypzeta/errors.hpp"

namespace hypzeta {

ExactRational bernoulli_double_sum(unsigned n) {
  ExactRational total(0);
  for (unsigned l = 0; l <= n; ++l) {
    BigInt inner = 0;
    for (unsigned i = 0; i <= l; ++i) {
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), i, n);  // GMP defines 0^0 = 1
      const BigInt term = binomial(l, i) * power;
      if (i % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    total += ExactRational(inner, BigInt(l + 1));
  }
  return total;
}

std::vector<ExactRational> bernoulli_recurrence_table(unsigned n) {
  std::vector<ExactRational> b(n + 1);
  b[0] = ExactRational(1);
  for (unsigned m = 1; m <= n; ++m) {
    if (m % 2 == 1 && m > 1) {
      b[m] = ExactRational(0);
      continue;
    }
    ExactRational acc(0);
    for (unsigned k = 0; k < m; ++k) {
      if (!b[k].is_zero()) acc += ExactRational(binomial(m + 1, k)) * b[k];
    }
    b[m] = -acc / ExactRational(static_cast<long>(m + 1));
  }
  return b;
}

ExactRational bernoulli_recurrence(unsigned n) { return bernoulli_recurrence_table(n).back(); }

std::vector<ExactRational> bernoulli_tangent_table(unsigned n) {
  std::vector<ExactRational> b(n + 1, ExactRational(0));
  b[0] = ExactRational(1);
  if (n >= 1) b[1] = ExactRational(BigInt(-1), BigInt(2));
  const unsigned half = n / 2;
  if (half == 0) return b;

  // Tangent numbers T_1..T_half (1, 2, 16, 272, ...), 1-based.
  std::vector<BigInt> t(half + 1);
  t[1] = 1;
  for (unsigned k = 2; k <= half; ++k) t[k] = (k - 1) * t[k - 1];
  BigInt scratch;
  for (unsigned k = 2; k <= half; ++k) {
    for (unsigned j = k; j <= half; ++j) {
      mpz_mul_ui(scratch.get_mpz_t(), t[j - 1].get_mpz_t(), j - k);
      mpz_mul_ui(t[j].get_mpz_t(), t[j].get_mpz_t(), j - k + 2);
      mpz_add(t[j].get_mpz_t(), t[j].get_mpz_t(), scratch.get_mpz_t());
    }
  }

  // B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
  for (unsigned k = 1; k <= half; ++k) {
    BigInt four_k = 1;
    four_k <<= 2 * k;
    BigInt num = t[k] * (2 * k);
    if (k % 2 == 0) num = -num;
    b[2 * k] = ExactRational(num, four_k * (four_k - 1));
  }
  return b;
}

BernoulliCache::BernoulliCache(unsigned n_max) : values_(bernoulli_tangent_table(n_max)) {}

std::shared_ptr<const BernoulliCache> BernoulliCache::for_coefficients(unsigned k_max) {
  return std::make_shared<const BernoulliCache>(2 * k_max + 2);
}

const ExactRational& BernoulliCache::at(unsigned n) const {
  if (n >= values_.size()) {
    throw RangeError("Bernoulli cache covers n <= " + std::to_string(n_max()) + ", requested " +
                     std::to_string(n));
  }
  return values_[n];
}

ExactRational zeta_even_rational(unsigned n, const ExactRational& b2n) {
  // -(-1)^n (2pi)^(2n) B / (2 (2n)!) = (-1)^(n+1) 2^(2n-1) B / (2n)! * pi^(2n)
  BigInt two_pow = 1;
  two_pow <<= 2 * n - 1;
  ExactRational r = b2n * ExactRational(two_pow, factorial(2 * n));
  return n % 2 == 1 ? r : -r;
}

PiPolynomial zeta_even_exact(unsigned n, const BernoulliCache& bern) {
  if (n == 0) throw DomainError("zeta_even_exact requires n >= 1");
  return PiPolynomial::monomial(2 * n, zeta_even_rational(n, bern.at(2 * n)));
}

PiPolynomial zeta_even_exact(unsigned n) {
  if (n == 0) throw DomainError("zeta_even_exact requires n >= 1");
  const auto table = bernoulli_tangent_table(2 * n);
  return PiPolynomial::monomial(2 * n, zeta_even_rational(n, table[2 * n]));
}

}  // namespace hypzeta
