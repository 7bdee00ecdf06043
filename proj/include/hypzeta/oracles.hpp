#pragma once

#include <optional>
#include <string_view>

#include "hypzeta/bigcomplex.hpp"
#include "hypzeta/precision.hpp"

namespace hypzeta {

enum class OracleMethod {
  dirichlet,            ///< partial Dirichlet sum with Euler-Maclaurin tail
  eta,                  ///< accelerated alternating series
  functional_equation,  ///< reflection onto the eta region
  bernoulli,            ///< exact values at non-positive integers
};

enum class Rigor { rigorous, heuristic };

std::string_view to_string(OracleMethod m);
std::string_view to_string(Rigor r);

struct OracleResult {
  BigComplex value;
  BigReal error_bound;
  Rigor rigor = Rigor::heuristic;
  OracleMethod method = OracleMethod::dirichlet;
};

/// sum_{m<N} m^-s + N^(1-s)/(s-1) + N^-s/2 + s/(12 N^(s+1)), N = n_terms.
/// The bound is the first omitted Euler-Maclaurin term; rigorous for real s.
/// Throws DomainError unless Re s > 1 and n_terms >= 10.
OracleResult dirichlet_oracle(const BigComplex& s, std::size_t n_terms, const PrecisionContext& ctx);

/// Smallest N for which the Dirichlet bound at s drops below 2^-target_bits,
/// clamped to [10, cap].
std::size_t dirichlet_terms_for(const BigComplex& s, const PrecisionContext& ctx, std::size_t cap);

/// eta(s) / (1 - 2^(1-s)) with eta summed by Borwein's Chebyshev-weighted
/// scheme. Throws DomainError for Re s <= 0 and ConditioningError when
/// |1 - 2^(1-s)| < 2^-(target/2).
OracleResult eta_oracle(const BigComplex& s, const PrecisionContext& ctx);

/// Principal-branch log Gamma via upward shift and Stirling's series.
/// Throws DomainError at non-positive integers.
BigComplex log_gamma(const BigComplex& z, const PrecisionContext& ctx);

/// |zeta(s) - 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)| / |zeta(s)| with
/// both zeta values from eta_oracle. Throws DomainError outside 0 < Re s < 1
/// and ConditioningError where the comparison degenerates.
BigReal functional_equation_residual(const BigComplex& s, const PrecisionContext& ctx);

/// zeta(s) = chi(s) zeta(1-s) with zeta(1-s) from eta_oracle; for Re s <= 0.
OracleResult reflection_oracle(const BigComplex& s, const PrecisionContext& ctx);

/// zeta(-n) = (-1)^n B_{n+1} / (n+1), exactly rounded.
OracleResult nonpositive_integer_oracle(unsigned n, const PrecisionContext& ctx);

/// The tightest oracle valid at s, or nullopt (s = 1, or every candidate is
/// ill-conditioned). With `series_free_only`, only the Dirichlet and eta
/// oracles are considered.
std::optional<OracleResult> best_oracle(const BigComplex& s, const PrecisionContext& ctx,
                                        bool series_free_only = false);

}  // namespace hypzeta
