#include "hypzeta/series.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

constexpr std::size_t kQuietRun = 8;
constexpr long kTailFactor = 16;
constexpr mpfr_prec_t kMagnitudeBits = 53;

/// Neumaier-compensated running sum of one real component.
class CompensatedSum {
 public:
  explicit CompensatedSum(mpfr_prec_t bits) : sum_(bits), carry_(bits), t_(bits) {}

  void add(const BigReal& x) {
    mpfr_add(t_.get(), sum_.get(), x.get(), MPFR_RNDN);
    if (mpfr_cmpabs(sum_.get(), x.get()) >= 0) {
      carry_ += (sum_ - t_) + x;
    } else {
      carry_ += (x - t_) + sum_;
    }
    std::swap(sum_, t_);
  }

  BigReal value() const { return sum_ + carry_; }

 private:
  BigReal sum_, carry_, t_;
};

/// Running state shared by eval_P and partial_sums_P: compensated sum,
/// sliding-window maximum of term magnitudes, and the quiet-run counter.
class SeriesState {
 public:
  SeriesState(mpfr_prec_t bits, unsigned target_bits)
      : re_(bits), im_(bits), threshold_exp_(-static_cast<long>(target_bits) - 8) {}

  void add(const BigComplex& term) {
    re_.add(term.re);
    im_.add(term.im);
    BigReal mag(abs(term), kMagnitudeBits);
    while (!window_.empty() && window_.back().second <= mag) window_.pop_back();
    window_.emplace_back(count_, std::move(mag));
    ++count_;
    const std::size_t width = std::max<std::size_t>(kQuietRun, (count_ + 3) / 4);
    while (window_.front().first + width < count_) window_.pop_front();
  }

  std::size_t count() const noexcept { return count_; }
  BigComplex value() const { return {re_.value(), im_.value()}; }

  BigReal tail_estimate() const {
    if (window_.empty()) return BigReal(kMagnitudeBits);
    return window_.front().second * BigReal(kTailFactor, kMagnitudeBits);
  }

  /// |term| < 2^-(target+8) |partial| for the latest term; tracks the run length.
  void update_quiet_run(const BigComplex& term) {
    const BigReal limit = ldexp(BigReal(abs(value()), kMagnitudeBits), threshold_exp_);
    if (BigReal(abs(term), kMagnitudeBits) < limit) {
      ++quiet_;
    } else {
      quiet_ = 0;
    }
  }

  bool converged() const {
    if (quiet_ < kQuietRun) return false;
    const BigReal limit = ldexp(BigReal(abs(value()), kMagnitudeBits), threshold_exp_);
    return window_.front().second < limit;
  }

 private:
  CompensatedSum re_, im_;
  std::deque<std::pair<std::size_t, BigReal>> window_;
  std::size_t count_ = 0;
  std::size_t quiet_ = 0;
  long threshold_exp_;
};

BigComplex to_precision(const BigComplex& z, mpfr_prec_t bits) { return z.rounded(bits); }

}  // namespace

std::string_view to_string(Warning w) {
  switch (w) {
    case Warning::slow_convergence:
      return "slow-convergence";
    case Warning::cap_reached:
      return "cap-reached";
    case Warning::near_pole:
      return "near-pole";
  }
  return "unknown";
}

bool EvalResult::has_warning(Warning w) const {
  return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
}

TermGenerator::TermGenerator(const BigComplex& s, mpfr_prec_t bits)
    : half_s_(ldexp(BigReal(s.re, bits), -1), ldexp(BigReal(s.im, bits), -1)), t_(1, bits) {}

void TermGenerator::advance() {
  const mpfr_prec_t p = t_.precision();
  const BigReal next(static_cast<long>(k_ + 1), p);
  BigComplex factor{next - half_s_.re, -half_s_.im};
  factor /= next;
  t_ *= factor;
  ++k_;
}

EvalResult eval_P(const BigComplex& s, const CoeffTable& coeffs, const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.working_bits();
  const std::size_t limit = std::min<std::size_t>(ctx.max_terms(), coeffs.k_max() + 1UL);
  TermGenerator gen(to_precision(s, p), p);
  SeriesState state(p, ctx.target_bits());

  bool exact = false;
  bool converged = false;
  while (state.count() < limit) {
    if (gen.exhausted()) {
      exact = true;
      break;
    }
    BigComplex term = gen.current() * coeffs.rounded(static_cast<unsigned>(gen.index()));
    state.add(term);
    state.update_quiet_run(term);
    if (state.converged()) {
      converged = true;
      break;
    }
    gen.advance();
  }
  if (!exact && gen.exhausted()) exact = true;

  EvalResult result;
  result.value = state.value().rounded(p);
  result.terms_used = state.count();
  result.ctx = ctx;
  result.tail_estimate = exact ? BigReal(kMagnitudeBits) : state.tail_estimate();
  if (!exact && !converged) {
    result.warnings.push_back(Warning::cap_reached);
    const BigReal limit_rel =
        ldexp(BigReal(abs(result.value), kMagnitudeBits), -static_cast<long>(ctx.target_bits() / 2));
    if (result.tail_estimate > limit_rel) result.warnings.push_back(Warning::slow_convergence);
  }
  return result;
}

EvalResult eval_zeta(const BigComplex& s, const CoeffTable& coeffs, const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.working_bits();
  const BigComplex shifted{BigReal(s.re, p) - BigReal(1, p), BigReal(s.im, p)};
  if (shifted.is_zero()) throw PoleError("zeta has a simple pole at s = 1");

  EvalResult result = eval_P(s, coeffs, ctx);
  const BigReal distance = abs(shifted);
  result.value /= shifted;
  result.tail_estimate = BigReal(result.tail_estimate / distance, kMagnitudeBits);
  if (distance < ldexp(BigReal(1, kMagnitudeBits), -static_cast<long>(ctx.target_bits() / 2))) {
    result.warnings.push_back(Warning::near_pole);
  }
  return result;
}

std::vector<BigComplex> term_sequence(const BigComplex& s, unsigned k_upto, const CoeffTable& coeffs,
                                      const PrecisionContext& ctx) {
  if (k_upto > coeffs.k_max()) {
    throw RangeError("term_sequence: k_upto " + std::to_string(k_upto) + " beyond table k_max " +
                     std::to_string(coeffs.k_max()));
  }
  const mpfr_prec_t p = ctx.working_bits();
  TermGenerator gen(to_precision(s, p), p);
  std::vector<BigComplex> out;
  out.reserve(k_upto + 1);
  for (unsigned k = 0; k <= k_upto; ++k) {
    out.push_back(gen.current() * coeffs.rounded(k));
    gen.advance();
  }
  return out;
}

std::vector<PartialSum> partial_sums_P(const BigComplex& s, const CoeffTable& coeffs,
                                       const PrecisionContext& ctx,
                                       std::span<const std::size_t> checkpoints) {
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
    throw std::invalid_argument("checkpoints must be ascending");
  }
  if (!checkpoints.empty() && checkpoints.back() > coeffs.k_max() + 1UL) {
    throw RangeError("checkpoint beyond coefficient table");
  }
  const mpfr_prec_t p = ctx.working_bits();
  TermGenerator gen(to_precision(s, p), p);
  SeriesState state(p, ctx.target_bits());
  std::vector<PartialSum> out;
  bool exact = false;
  for (const std::size_t n : checkpoints) {
    while (state.count() < n) {
      if (gen.exhausted()) exact = true;
      state.add(gen.current() * coeffs.rounded(static_cast<unsigned>(gen.index())));
      gen.advance();
    }
    if (gen.exhausted()) exact = true;
    out.push_back({n, state.value().rounded(p), exact ? BigReal(kMagnitudeBits) : state.tail_estimate()});
  }
  return out;
}

}  // namespace hypzeta
