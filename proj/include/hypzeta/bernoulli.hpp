#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hypzeta/pi_polynomial.hpp"
#include "hypzeta/rational.hpp"

namespace hypzeta {

/// B_n from the explicit double sum
///   B_n = sum_{l=0}^{n} 1/(l+1) sum_{i=0}^{l} (-1)^i C(l,i) i^n,   0^0 = 1.
/// Inner terms grow like n^n; intended as a reference for small n.
ExactRational bernoulli_double_sum(unsigned n);

/// B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0, with B_1 = -1/2.
ExactRational bernoulli_recurrence(unsigned n);
/// B_0..B_n by the same recurrence.
std::vector<ExactRational> bernoulli_recurrence_table(unsigned n);

/// B_0..B_n via integer tangent numbers: O(n^2) small-multiplier integer
/// updates and a single rational normalization per even index.
std::vector<ExactRational> bernoulli_tangent_table(unsigned n);

/// Immutable table of B_0..B_{n_max}. Safe to share across threads.
class BernoulliCache {
 public:
  explicit BernoulliCache(unsigned n_max);

  /// Cache large enough for coefficient tables up to k_max (n_max = 2 k_max + 2).
  static std::shared_ptr<const BernoulliCache> for_coefficients(unsigned k_max);

  unsigned n_max() const noexcept { return static_cast<unsigned>(values_.size() - 1); }
  /// Throws RangeError past n_max.
  const ExactRational& at(unsigned n) const;
  const std::vector<ExactRational>& values() const noexcept { return values_; }

 private:
  std::vector<ExactRational> values_;
};

/// zeta(2n) = -(-1)^n (2 pi)^(2n) B_{2n} / (2 (2n)!), as r * pi^(2n).
/// Throws DomainError for n == 0.
PiPolynomial zeta_even_exact(unsigned n);
PiPolynomial zeta_even_exact(unsigned n, const BernoulliCache& bern);

/// The rational r_n of zeta(2n) = r_n pi^(2n).
ExactRational zeta_even_rational(unsigned n, const ExactRational& b2n);

}  // namespace hypzeta
