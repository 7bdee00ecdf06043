#pragma once

#include <string>
#include <string_view>

#include "hypzeta/bigreal.hpp"

namespace hypzeta {

struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}
  /// Real value with a zero imaginary part at the same precision.
  explicit BigComplex(const BigReal& real) : re(real), im(real.precision()) {}
  BigComplex(long real, mpfr_prec_t bits) : re(real, bits), im(bits) {}

  /// Parses "a", "a+bi", "a-bi", "bi" with plain decimal parts.
  static BigComplex parse(std::string_view text, mpfr_prec_t bits);

  mpfr_prec_t precision() const noexcept;
  BigComplex rounded(mpfr_prec_t bits) const { return {re.rounded(bits), im.rounded(bits)}; }

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  bool is_real() const noexcept { return im.is_zero(); }

  /// "a+bi" using round-trip decimal components.
  std::string to_string() const;

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator/=(const BigReal& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

BigReal abs(const BigComplex& z);
/// Principal argument in (-pi, pi].
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal logarithm.
BigComplex log(const BigComplex& z);
BigComplex sin(const BigComplex& z);

}  // namespace hypzeta
