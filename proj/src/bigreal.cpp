#include "hypzeta/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace hypzeta {

namespace {

constexpr mpfr_prec_t kDefaultBits = 64;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

struct MpfrStringDeleter {
  void operator()(char* s) const { mpfr_free_str(s); }
};

}  // namespace

BigReal::BigReal() {
  mpfr_init2(v_, kDefaultBits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::parse(std::string_view text, mpfr_prec_t bits) {
  const std::string s(text);
  BigReal r(bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("malformed decimal literal: '" + s + "'");
  }
  return r;
}

BigReal BigReal::from_double(double value, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

std::string BigReal::to_string() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";

  const std::size_t ndigits = mpfr_get_str_ndigits(10, precision());
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, MpfrStringDeleter> raw(
      mpfr_get_str(nullptr, &exp10, 10, ndigits, v_, MPFR_RNDN));
  std::string digits(raw.get());
  std::string sign_str;
  if (digits.front() == '-') {
    sign_str = "-";
    digits.erase(0, 1);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  // value = 0.digits * 10^exp10
  const long e = static_cast<long>(exp10);
  std::string out;
  if (e > 0 && e <= 21) {
    if (static_cast<long>(digits.size()) <= e) {
      out = digits + std::string(static_cast<std::size_t>(e) - digits.size(), '0');
    } else {
      out = digits.substr(0, static_cast<std::size_t>(e)) + "." + digits.substr(static_cast<std::size_t>(e));
    }
  } else if (e <= 0 && e > -5) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    const long sci = e - 1;
    out += (sci < 0 ? "e-" : "e+") + std::to_string(sci < 0 ? -sci : sci);
  }
  return sign_str + out;
}

std::string BigReal::to_fixed(int decimals) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNf", decimals, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define HYPZETA_UNARY(name, fn)                   \
  BigReal name(const BigReal& x) {                \
    BigReal r(x.precision());                     \
    fn(r.get(), x.get(), MPFR_RNDN);              \
    return r;                                     \
  }

HYPZETA_UNARY(abs, mpfr_abs)
HYPZETA_UNARY(sqrt, mpfr_sqrt)
HYPZETA_UNARY(exp, mpfr_exp)
HYPZETA_UNARY(log, mpfr_log)
HYPZETA_UNARY(sin, mpfr_sin)
HYPZETA_UNARY(cos, mpfr_cos)
HYPZETA_UNARY(sinh, mpfr_sinh)
HYPZETA_UNARY(cosh, mpfr_cosh)

#undef HYPZETA_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(wider(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, unsigned long n) {
  BigReal r(x.precision());
  mpfr_pow_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

double ulp_distance(const BigReal& a, const BigReal& b, const BigReal& reference, unsigned bits) {
  const mpfr_prec_t p = std::max({a.precision(), b.precision(), static_cast<mpfr_prec_t>(bits)}) + 8;
  BigReal diff(p);
  mpfr_sub(diff.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  const long ulp_exp = reference.is_zero() ? -static_cast<long>(bits)
                                           : reference.exponent() - static_cast<long>(bits);
  mpfr_mul_2si(diff.get(), diff.get(), -ulp_exp, MPFR_RNDN);
  return diff.to_double();
}

}  // namespace hypzeta
