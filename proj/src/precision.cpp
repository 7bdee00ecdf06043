#include "hypzeta/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypzeta {

PrecisionContext::PrecisionContext(unsigned target_bits, unsigned guard_bits, std::size_t max_terms)
    : target_bits_(target_bits), guard_bits_(guard_bits), max_terms_(max_terms) {
  if (target_bits < kMinTargetBits) {
    throw std::invalid_argument("target_bits must be at least " + std::to_string(kMinTargetBits));
  }
  if (max_terms == 0) throw std::invalid_argument("max_terms must be positive");
}

int PrecisionContext::target_digits() const noexcept {
  return static_cast<int>(std::floor(target_bits_ * 0.30102999566398120));
}

PrecisionContext PrecisionContext::with_extra_guard(unsigned extra) const {
  return PrecisionContext(target_bits_, guard_bits_ + extra, max_terms_);
}

PrecisionContext PrecisionContext::with_max_terms(std::size_t max_terms) const {
  return PrecisionContext(target_bits_, guard_bits_, max_terms);
}

}  // namespace hypzeta
