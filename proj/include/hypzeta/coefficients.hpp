#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "hypzeta/bernoulli.hpp"
#include "hypzeta/bigreal.hpp"
#include "hypzeta/pi_polynomial.hpp"
#include "hypzeta/precision.hpp"

namespace hypzeta {

/// How the rounded coefficients of a table were produced.
enum class CoeffRoute {
  exact,      ///< exact pi-polynomial forms, rounded once
  float_sum,  ///< alternating binomial sum of rounded zeta(2j+2)
  oracle,     ///< truncated lattice sum with analytic alpha-derivative
  toy,        ///< zeta(2j+2) replaced by 1
};

std::string_view to_string(CoeffRoute route);
/// Accepts "exact", "float", "oracle", "toy"; throws std::invalid_argument.
CoeffRoute parse_route(std::string_view text);

/// A value together with an absolute error bound.
struct BoundedValue {
  BigReal value;
  BigReal bound;
};

/// A_k = sum_j C(k,j) pi^(2j+2) B_{2j+2} / ((2)_j (1/2)_j), exactly.
/// Throws RangeError if `bern` does not reach index 2k+2.
PiPolynomial a_exact(unsigned k, const BernoulliCache& bern);

/// The rational B_{2j+2} / ((2)_j (1/2)_j) multiplying C(k,j) pi^(2j+2) in a_exact.
ExactRational a_exact_weight(unsigned j, const BernoulliCache& bern);

/// A_k = sum_j (-1)^j C(k,j) (2j+1) zeta(2j+2) in floating arithmetic, with
/// k extra guard bits to absorb the cancellation of the alternating sum.
BigReal a_float(unsigned k, const PrecisionContext& ctx, const BernoulliCache& bern);
BigReal a_float(unsigned k, const PrecisionContext& ctx);

/// A_k = sum_n n^-2 (1-n^-2)^k - 2k sum_n n^-4 (1-n^-2)^(k-1), summed for
/// n <= n_max, plus a midpoint-integral correction for the tail. `bound`
/// covers the remaining tail and the rounding of the sum.
BoundedValue a_oracle_limit(unsigned k, const PrecisionContext& ctx, std::uint64_t n_max);
/// The same for every k in [0, k_max], sharing one pass over n.
std::vector<BoundedValue> a_oracle_limit_range(unsigned k_max, const PrecisionContext& ctx,
                                               std::uint64_t n_max);

/// a_k = sum_j (-1)^j C(k,j) (2j+1): 1, -2, then 0 forever.
BigInt a_toy(unsigned k);

/// (-1)^j C(k,j) (2j+1), times zeta(2j+2) when `with_zeta`. RangeError if j > k.
BigReal table_term(unsigned k, unsigned j, bool with_zeta, const PrecisionContext& ctx);

/// Coefficients A_0..A_k_max with their rounded values at a fixed context.
/// Immutable once built; share freely between threads.
class CoeffTable {
 public:
  static constexpr unsigned kDefaultKMax = 200;
  static constexpr std::uint64_t kDefaultOracleNMax = 1'000'000;

  static CoeffTable build(unsigned k_max, const PrecisionContext& ctx,
                          CoeffRoute route = CoeffRoute::exact,
                          std::shared_ptr<const BernoulliCache> bern = nullptr,
                          std::uint64_t oracle_n_max = kDefaultOracleNMax);

  unsigned k_max() const noexcept { return k_max_; }
  CoeffRoute route() const noexcept { return route_; }
  const PrecisionContext& ctx() const noexcept { return ctx_; }

  const BigReal& rounded(unsigned k) const { return rounded_.at(k); }
  const std::vector<BigReal>& rounded() const noexcept { return rounded_; }
  /// Absolute error bound of rounded(k); only the oracle route carries one,
  /// other routes report zero.
  const BigReal& bound(unsigned k) const { return bounds_.at(k); }

  /// Exact form of A_k, materialized from the Bernoulli cache on request.
  /// Throws std::logic_error for the toy route.
  PiPolynomial exact(unsigned k) const;
  const BernoulliCache& bernoulli() const;

 private:
  CoeffTable(unsigned k_max, const PrecisionContext& ctx, CoeffRoute route,
             std::shared_ptr<const BernoulliCache> bern);

  unsigned k_max_;
  PrecisionContext ctx_;
  CoeffRoute route_;
  std::shared_ptr<const BernoulliCache> bern_;
  std::vector<BigReal> rounded_;
  std::vector<BigReal> bounds_;
};

/// sum_{k<=j} (-1)^k C(j,k) A_k from the table's rounded values; equals
/// (2j+1) zeta(2j+2) because the binomial transform is an involution.
BigReal inverse_binomial_check(const CoeffTable& table, unsigned j);

}  // namespace hypzeta
