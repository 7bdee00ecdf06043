#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypzeta/coefficients.hpp"
#include "hypzeta/oracles.hpp"
#include "hypzeta/series.hpp"

namespace hypzeta {

struct DecayReport {
  unsigned k_min = 0;
  unsigned k_max = 0;
  std::vector<BigReal> magnitudes;  ///< |A_k| for k in [k_min, k_max]
  /// Least-squares slope of ln|A_k| against ln k, zero magnitudes excluded.
  double loglog_slope = 0.0;
  std::size_t fitted_points = 0;
  /// The running maximum max_{j >= k} |A_j| never increases with k.
  bool envelope_monotone = false;
  /// Every magnitude is strictly smaller than the one before it.
  bool strictly_decreasing = false;
};

/// Throws RangeError unless 2 <= k_min < k_max <= coeffs.k_max(), and
/// DegenerateDataError when fewer than two magnitudes are nonzero.
DecayReport decay_report(const CoeffTable& coeffs, unsigned k_min, unsigned k_max);

struct ProfileRow {
  std::size_t terms = 0;
  BigComplex partial;  ///< zeta partial sum (P partial sum at s = 1)
  BigReal tail_estimate;
  std::optional<BigReal> error;  ///< |partial - oracle| where an oracle is valid
};

struct ConvergenceProfile {
  BigComplex s;
  std::optional<OracleResult> oracle;
  std::vector<ProfileRow> rows;
};

/// Partial sums of the expansion at each checkpoint, compared with the best
/// available oracle. At s = 1 the entire function P is profiled against its
/// value 1.
ConvergenceProfile convergence_profile(const BigComplex& s, const CoeffTable& coeffs,
                                       const PrecisionContext& ctx,
                                       std::span<const std::size_t> checkpoints);

}  // namespace hypzeta
