#pragma once

#include <map>
#include <string>

#include "hypzeta/bigreal.hpp"
#include "hypzeta/precision.hpp"
#include "hypzeta/rational.hpp"

namespace hypzeta {

/// Exact value of the form sum_m r_m * pi^(2m) with rational r_m and m >= 1.
/// Zero coefficients are never stored.
class PiPolynomial {
 public:
  using Terms = std::map<unsigned, ExactRational>;

  PiPolynomial() = default;

  /// c * pi^power. `power` must be even and positive (DomainError otherwise).
  static PiPolynomial monomial(unsigned power, const ExactRational& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of pi^power, zero when absent.
  ExactRational coefficient(unsigned power) const;
  /// Highest stored power of pi, 0 for the zero polynomial.
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(unsigned power, const ExactRational& c);

  PiPolynomial& operator+=(const PiPolynomial& rhs);
  PiPolynomial& operator-=(const PiPolynomial& rhs);
  PiPolynomial& operator*=(const ExactRational& scalar);

  friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
  friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
  friend PiPolynomial operator*(PiPolynomial a, const ExactRational& s) { return a *= s; }
  friend bool operator==(const PiPolynomial&, const PiPolynomial&) = default;

  /// Rounds the exact value to the context's working precision. Internal
  /// precision is raised until the cancellation between terms is covered,
  /// so the result is within a few ulp regardless of how much cancels.
  BigReal evaluate(const PrecisionContext& ctx) const;

  /// "1/6 * pi^2 - 1/30 * pi^4"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace hypzeta
