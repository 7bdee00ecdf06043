#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace hypzeta {

using BigInt = mpz_class;

/// Exact rational, always in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  ExactRational(const BigInt& numerator, const BigInt& denominator);
  explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& value() const noexcept { return q_; }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  int sign() const noexcept { return sgn(q_); }

  /// "n/d", or "n" when the denominator is 1.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.q_)); }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), exact.
ExactRational pochhammer(const ExactRational& a, unsigned long n);

}  // namespace hypzeta
