#pragma once

#include <cstddef>
#include <mpfr.h>

namespace hypzeta {

/// Working-precision policy threaded through every numeric operation.
///
/// `target_bits` is the significand size promised for final results;
/// `guard_bits` are carried on top of it during computation. Callers that
/// know how many bits an operation will lose to cancellation add them with
/// `with_extra_guard`.
class PrecisionContext {
 public:
  static constexpr unsigned kMinTargetBits = 16;
  static constexpr unsigned kDefaultTargetBits = 128;
  static constexpr unsigned kDefaultGuardBits = 32;
  static constexpr std::size_t kDefaultMaxTerms = 20000;

  PrecisionContext() = default;
  explicit PrecisionContext(unsigned target_bits, unsigned guard_bits = kDefaultGuardBits,
                            std::size_t max_terms = kDefaultMaxTerms);

  unsigned target_bits() const noexcept { return target_bits_; }
  unsigned guard_bits() const noexcept { return guard_bits_; }
  std::size_t max_terms() const noexcept { return max_terms_; }

  mpfr_prec_t working_bits() const noexcept {
    return static_cast<mpfr_prec_t>(target_bits_) + guard_bits_;
  }

  /// Number of decimal digits carried by `target_bits`.
  int target_digits() const noexcept;

  PrecisionContext with_extra_guard(unsigned extra) const;
  PrecisionContext with_max_terms(std::size_t max_terms) const;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  unsigned target_bits_ = kDefaultTargetBits;
  unsigned guard_bits_ = kDefaultGuardBits;
  std::size_t max_terms_ = kDefaultMaxTerms;
};

}  // namespace hypzeta
