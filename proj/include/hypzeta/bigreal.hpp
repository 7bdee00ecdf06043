#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace hypzeta {

/// Owning value wrapper over an MPFR float. Every operation rounds to
/// nearest-even; binary operators produce a result at the larger of the two
/// operand precisions.
class BigReal {
 public:
  BigReal();
  explicit BigReal(mpfr_prec_t bits);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(const mpz_class& value, mpfr_prec_t bits);
  BigReal(const mpq_class& value, mpfr_prec_t bits);
  BigReal(const BigReal& other, mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal (or "inf"/"nan") literal, rounding to nearest.
  /// Throws std::invalid_argument on malformed input.
  static BigReal parse(std::string_view text, mpfr_prec_t bits);
  static BigReal from_double(double value, mpfr_prec_t bits);

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with |x| = m * 2^e, 1/2 <= m < 1. Undefined for zero.
  long exponent() const noexcept { return mpfr_get_exp(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Shortest decimal string that round-trips at this value's precision.
  std::string to_string() const;
  /// Fixed-point string with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  BigReal rounded(mpfr_prec_t bits) const { return BigReal(*this, bits); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
/// Correctly rounded x^y for real x, y.
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, unsigned long n);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);

/// Distance |a - b| measured in units in the last place of `reference` at
/// `bits` of significand. A zero reference uses 2^-bits as the unit.
double ulp_distance(const BigReal& a, const BigReal& b, const BigReal& reference, unsigned bits);
inline double ulp_distance(const BigReal& a, const BigReal& b, unsigned bits) {
  return ulp_distance(a, b, b, bits);
}

}  // namespace hypzeta
