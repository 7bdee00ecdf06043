#include "hypzeta/rational.hpp"

#include <stdexcept>

namespace hypzeta {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator)
    : q_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

std::string ExactRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  q_ += rhs.q_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= rhs.q_;
  return *this;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactRational pochhammer(const ExactRational& a, unsigned long n) {
  ExactRational r(1);
  ExactRational factor = a;
  for (unsigned long i = 0; i < n; ++i) {
    r *= factor;
    factor += ExactRational(1);
  }
  return r;
}

}  // namespace hypzeta
