#include "hypzeta/diagnostics.hpp"

#include <cmath>
#include <string>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

constexpr mpfr_prec_t kReportBits = 53;

double natural_log(const BigReal& x) { return log(BigReal(x, kReportBits)).to_double(); }

}  // namespace

DecayReport decay_report(const CoeffTable& coeffs, unsigned k_min, unsigned k_max) {
  if (k_min < 2 || k_min >= k_max || k_max > coeffs.k_max()) {
    throw RangeError("decay_report requires 2 <= k_min < k_max <= " + std::to_string(coeffs.k_max()));
  }
  DecayReport report;
  report.k_min = k_min;
  report.k_max = k_max;
  for (unsigned k = k_min; k <= k_max; ++k) report.magnitudes.push_back(abs(coeffs.rounded(k)));

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (unsigned k = k_min; k <= k_max; ++k) {
    const BigReal& m = report.magnitudes[k - k_min];
    if (m.is_zero()) continue;
    const double x = std::log(static_cast<double>(k));
    const double y = natural_log(m);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) {
    throw DegenerateDataError("decay_report: fewer than two nonzero magnitudes in [" +
                              std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
  }
  const double dn = static_cast<double>(n);
  report.loglog_slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  report.fitted_points = n;

  // Suffix maxima, then check they never increase.
  std::vector<BigReal> envelope(report.magnitudes);
  for (std::size_t i = envelope.size() - 1; i-- > 0;) envelope[i] = max(envelope[i], envelope[i + 1]);
  report.envelope_monotone = true;
  for (std::size_t i = 1; i < envelope.size(); ++i) {
    if (envelope[i] > envelope[i - 1]) report.envelope_monotone = false;
  }
  report.strictly_decreasing = true;
  for (std::size_t i = 1; i < report.magnitudes.size(); ++i) {
    if (!(report.magnitudes[i] < report.magnitudes[i - 1])) report.strictly_decreasing = false;
  }
  return report;
}

ConvergenceProfile convergence_profile(const BigComplex& s, const CoeffTable& coeffs,
                                       const PrecisionContext& ctx,
                                       std::span<const std::size_t> checkpoints) {
  const mpfr_prec_t p = ctx.working_bits();
  ConvergenceProfile profile;
  profile.s = s.rounded(p);

  BigComplex shifted = profile.s;
  shifted.re -= BigReal(1, p);
  const bool at_pole = shifted.is_zero();

  std::optional<BigComplex> reference;
  if (at_pole) {
    reference = BigComplex(1, p);
  } else {
    profile.oracle = best_oracle(s, ctx);
    if (profile.oracle) reference = profile.oracle->value;
  }

  const auto partials = partial_sums_P(s, coeffs, ctx, checkpoints);
  const BigReal distance = at_pole ? BigReal(1, p) : abs(shifted);
  for (const auto& ps : partials) {
    ProfileRow row;
    row.terms = ps.terms;
    row.partial = at_pole ? ps.value : ps.value / shifted;
    row.tail_estimate = BigReal(ps.tail_estimate / distance, kReportBits);
    if (reference) row.error = BigReal(abs(row.partial - *reference), kReportBits);
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

}  // namespace hypzeta
