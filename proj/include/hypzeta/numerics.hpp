#pragma once

#include "hypzeta/bigcomplex.hpp"
#include "hypzeta/bigreal.hpp"
#include "hypzeta/precision.hpp"
#include "hypzeta/rational.hpp"

namespace hypzeta {

/// pi at the context's working precision, correctly rounded.
BigReal pi(const PrecisionContext& ctx);
BigReal pi(mpfr_prec_t bits);

/// Correctly rounded conversion at working precision (round to nearest-even).
BigReal rational_to_real(const ExactRational& q, const PrecisionContext& ctx);
BigReal rational_to_real(const ExactRational& q, mpfr_prec_t bits);

/// x^w = exp(w ln x) on the principal real logarithm. Throws DomainError for
/// x <= 0. Purely real exponents go through MPFR's correctly rounded power,
/// so x^0 = 1 and x^1 = x exactly.
BigComplex complex_pow_real_base(const BigReal& x, const BigComplex& w, const PrecisionContext& ctx);

}  // namespace hypzeta
