#include "hypzeta/bigcomplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypzeta {

namespace {

// Extra bits carried inside multi-step complex kernels before the final rounding.
constexpr mpfr_prec_t kKernelGuard = 16;

BigReal parse_component(std::string_view text, mpfr_prec_t bits) {
  if (text == "" || text == "+") return BigReal(1, bits);
  if (text == "-") return BigReal(-1, bits);
  const std::string_view body = (text.front() == '+') ? text.substr(1) : text;
  return BigReal::parse(body, bits);
}

}  // namespace

BigComplex BigComplex::parse(std::string_view text, mpfr_prec_t bits) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  if (text.back() != 'i') return BigComplex(BigReal::parse(text, bits), BigReal(bits));

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {BigReal(bits), parse_component(body, bits)};
  return {BigReal::parse(body.substr(0, split), bits), parse_component(body.substr(split), bits)};
}

mpfr_prec_t BigComplex::precision() const noexcept { return std::max(re.precision(), im.precision()); }

std::string BigComplex::to_string() const {
  std::string imag = im.to_string();
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return re.to_string() + imag + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  const mpfr_prec_t p = std::max(precision(), rhs.precision());
  if (im.is_zero() && rhs.im.is_zero()) {
    re = BigReal(re, p) * rhs.re;
    im = BigReal(p);
    return *this;
  }
  const mpfr_prec_t w = p + kKernelGuard;
  const BigReal a(re, w), b(im, w);
  BigReal real = a * rhs.re - b * rhs.im;
  BigReal imag = a * rhs.im + b * rhs.re;
  re = BigReal(real, p);
  im = BigReal(imag, p);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  if (rhs.is_zero()) throw std::domain_error("complex division by zero");
  const mpfr_prec_t p = std::max(precision(), rhs.precision());
  if (rhs.im.is_zero()) {
    re = BigReal(re, p) / rhs.re;
    im = BigReal(im, p) / rhs.re;
    return *this;
  }
  const mpfr_prec_t w = p + kKernelGuard;
  const BigReal a(re, w), b(im, w), c(rhs.re, w), d(rhs.im, w);
  const BigReal denom = c * c + d * d;
  BigReal real = (a * c + b * d) / denom;
  BigReal imag = (b * c - a * d) / denom;
  re = BigReal(real, p);
  im = BigReal(imag, p);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  if (z.im.is_zero()) return BigComplex(exp(BigReal(z.re, p)));
  const mpfr_prec_t w = p + kKernelGuard;
  const BigReal scale = exp(BigReal(z.re, w));
  const BigReal y(z.im, w);
  return {BigReal(scale * cos(y), p), BigReal(scale * sin(y), p)};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  const mpfr_prec_t p = z.precision();
  const mpfr_prec_t w = p + kKernelGuard;
  const BigReal x(z.re, w), y(z.im, w);
  return {BigReal(log(hypot(x, y)), p), BigReal(atan2(y, x), p)};
}

BigComplex sin(const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  if (z.im.is_zero()) return BigComplex(sin(BigReal(z.re, p)));
  const mpfr_prec_t w = p + kKernelGuard;
  const BigReal x(z.re, w), y(z.im, w);
  return {BigReal(sin(x) * cosh(y), p), BigReal(cos(x) * sinh(y), p)};
}

}  // namespace hypzeta
