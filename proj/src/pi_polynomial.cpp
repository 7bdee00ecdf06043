#include "hypzeta/pi_polynomial.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "hypzeta/errors.hpp"
#include "hypzeta/numerics.hpp"

namespace hypzeta {

namespace {

void check_power(unsigned power) {
  if (power == 0 || power % 2 != 0) {
    throw DomainError("pi power must be even and positive, got " + std::to_string(power));
  }
}

long bit_length(std::size_t v) {
  long n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

}  // namespace

PiPolynomial PiPolynomial::monomial(unsigned power, const ExactRational& c) {
  PiPolynomial p;
  p.add_term(power, c);
  return p;
}

ExactRational PiPolynomial::coefficient(unsigned power) const {
  const auto it = terms_.find(power);
  return it == terms_.end() ? ExactRational(0) : it->second;
}

void PiPolynomial::add_term(unsigned power, const ExactRational& c) {
  check_power(power);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& rhs) {
  for (const auto& [power, c] : rhs.terms_) add_term(power, c);
  return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& rhs) {
  for (const auto& [power, c] : rhs.terms_) add_term(power, -c);
  return *this;
}

PiPolynomial& PiPolynomial::operator*=(const ExactRational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [power, c] : terms_) c *= scalar;
  return *this;
}

BigReal PiPolynomial::evaluate(const PrecisionContext& ctx) const {
  const mpfr_prec_t target = ctx.working_bits();
  if (terms_.empty()) return BigReal(target);

  const long count_bits = bit_length(terms_.size());
  mpfr_prec_t p = target + 16 + count_bits;
  for (;;) {
    const BigReal pi_sq = pow(pi(p + 8), 2UL);
    BigReal sum(p);
    long max_exp = std::numeric_limits<long>::min();
    for (const auto& [power, c] : terms_) {
      BigReal term = BigReal(c.value(), p) * pow(pi_sq, power / 2UL);
      max_exp = std::max(max_exp, term.exponent());
      sum += term;
    }
    // pi is transcendental, so a non-empty polynomial never sums to zero.
    const long lost = sum.is_zero() ? p : max_exp + count_bits - sum.exponent();
    if (p - lost >= target + 8) return BigReal(sum, target);
    p += lost + 16;
  }
}

std::string PiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [power, c] : terms_) {
    std::string mag = (c.sign() < 0 ? -c : c).to_string();
    if (first) {
      out += c.sign() < 0 ? "-" : "";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += mag + " * pi^" + std::to_string(power);
    first = false;
  }
  return out;
}

}  // namespace hypzeta
