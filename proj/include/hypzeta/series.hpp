#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hypzeta/bigcomplex.hpp"
#include "hypzeta/coefficients.hpp"
#include "hypzeta/precision.hpp"

namespace hypzeta {

enum class Warning {
  slow_convergence,  ///< tail estimate above 2^-(target/2) relative to the value
  cap_reached,       ///< max_terms or the coefficient table ran out first
  near_pole,         ///< |s - 1| < 2^-(target/2)
};

std::string_view to_string(Warning w);

struct EvalResult {
  BigComplex value;
  std::size_t terms_used = 0;
  /// Heuristic: 16 x the largest of the trailing max(8, n/4) terms. Zero when
  /// the series terminated exactly.
  BigReal tail_estimate;
  PrecisionContext ctx;
  std::vector<Warning> warnings;

  bool has_warning(Warning w) const;
};

/// Weights t_k = (1 - s/2)_k / k! of the expansion, by the ratio recurrence
/// t_{k+1} = t_k (k + 1 - s/2) / (k + 1). For s = 2m the factor at k = m-1
/// is an exact zero, so every later weight vanishes exactly.
class TermGenerator {
 public:
  TermGenerator(const BigComplex& s, mpfr_prec_t bits);

  std::size_t index() const noexcept { return k_; }
  const BigComplex& current() const noexcept { return t_; }
  bool exhausted() const noexcept { return t_.is_zero(); }
  void advance();

 private:
  BigComplex half_s_;
  BigComplex t_;
  std::size_t k_ = 0;
};

/// Partial sum of sum_k t_k A_k = (s - 1) zeta(s), an entire function of s.
EvalResult eval_P(const BigComplex& s, const CoeffTable& coeffs, const PrecisionContext& ctx);

/// zeta(s) = eval_P(s) / (s - 1). Throws PoleError at s = 1.
EvalResult eval_zeta(const BigComplex& s, const CoeffTable& coeffs, const PrecisionContext& ctx);

/// The individual products t_k A_k for k = 0..k_upto. RangeError past the table.
std::vector<BigComplex> term_sequence(const BigComplex& s, unsigned k_upto, const CoeffTable& coeffs,
                                      const PrecisionContext& ctx);

/// Plain partial sums of P (no stopping rule) after exactly N terms for each N
/// in `checkpoints` (ascending, each <= k_max + 1), with the tail estimate the
/// evaluator would report at that point.
struct PartialSum {
  std::size_t terms = 0;
  BigComplex value;
  BigReal tail_estimate;
};
std::vector<PartialSum> partial_sums_P(const BigComplex& s, const CoeffTable& coeffs,
                                       const PrecisionContext& ctx,
                                       std::span<const std::size_t> checkpoints);

}  // namespace hypzeta
