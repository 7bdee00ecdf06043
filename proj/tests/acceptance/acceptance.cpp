// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypzeta/bernoulli.hpp"
#include "hypzeta/cli.hpp"
#include "hypzeta/coefficients.hpp"
#include "hypzeta/diagnostics.hpp"
#include "hypzeta/oracles.hpp"
#include "hypzeta/series.hpp"

using namespace hypzeta;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string sci(const BigReal& x, int digits = 3) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits, x.to_double());
  return buf;
}

const PrecisionContext& ctx128() {
  static const PrecisionContext ctx(128);
  return ctx;
}

const PrecisionContext& ctx256() {
  static const PrecisionContext ctx(256, PrecisionContext::kDefaultGuardBits, 20000);
  return ctx;
}

// k_max = 2000 lets the series use up to 2001 terms at 256 bits.
const CoeffTable& table256() {
  static const CoeffTable table = CoeffTable::build(2000, ctx256());
  return table;
}

BigComplex at256(const char* text) { return BigComplex::parse(text, ctx256().working_bits()); }

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Verdict table_reproduction() {
  Verdict v;
  std::ostringstream out, err;
  const int status = cli::run({"verify-tables"}, out, err);
  v.require(status == cli::kOk, "verify-tables exit status " + std::to_string(status));
  v.require(out.str().find(",false") == std::string::npos, "mismatching cell");

  const std::array<long, 5> column4 = {1, -12, 30, -28, 9};
  long sum = 0;
  for (unsigned j = 0; j <= 4; ++j) {
    const BigReal cell = table_term(4, j, false, ctx128());
    v.require(cell.is_integer() && cell == BigReal(column4[j], 64), "integer cell (4," + std::to_string(j) + ")");
    sum += column4[j];
  }
  v.require(sum == 0, "integer column k=4 sum");
  const std::array<const char*, 4> zeta_cells = {"-12.99", "30.52", "-28.11", "9.01"};
  for (unsigned j = 1; j <= 4; ++j) {
    v.require(table_term(4, j, true, ctx128()).to_fixed(2) == zeta_cells[j - 1], "zeta cell (4," + std::to_string(j) + ")");
  }
  const CoeffTable table = CoeffTable::build(4, ctx128());
  const std::array<std::pair<int, const char*>, 5> bottom = {
      {{3, "1.645"}, {2, "-1.60"}, {3, "0.238"}, {3, "0.136"}, {4, "0.0721"}}};
  for (unsigned k = 0; k <= 4; ++k) {
    v.require(table.rounded(k).to_fixed(bottom[k].first) == bottom[k].second, "bottom row k=" + std::to_string(k));
  }
  v.detail << "verify-tables status " << status << ", 60 cells checked";
  return v;
}

Verdict toy_collapse() {
  Verdict v;
  for (unsigned k = 0; k <= 50; ++k) {
    const BigInt expected = k == 0 ? 1 : (k == 1 ? -2 : 0);
    v.require(a_toy(k) == expected, "a_toy(" + std::to_string(k) + ")");
  }
  v.detail << "a_0..a_50 = 1, -2, 0, ..., 0";
  return v;
}

Verdict route_agreement() {
  Verdict v;
  const auto& ctx = ctx128();
  const CoeffTable exact = CoeffTable::build(40, ctx);
  const CoeffTable flt = CoeffTable::build(40, ctx, CoeffRoute::float_sum);
  double worst_ulp = 0;
  for (unsigned k = 0; k <= 40; ++k) {
    const double d = ulp_distance(flt.rounded(k), exact.rounded(k), ctx.target_bits());
    worst_ulp = std::max(worst_ulp, d);
    v.require(d <= 8.0, "float route k=" + std::to_string(k));
  }
  const auto oracle = a_oracle_limit_range(20, ctx, 1'000'000);
  double worst_ratio = 0;
  for (unsigned k = 0; k <= 20; ++k) {
    const BigReal diff = abs(oracle[k].value - exact.rounded(k));
    worst_ratio = std::max(worst_ratio, (diff / oracle[k].bound).to_double());
    v.require(diff <= oracle[k].bound, "oracle route k=" + std::to_string(k));
  }
  v.detail << "float max " << worst_ulp << " ulp (k<=40); oracle max |diff|/bound " << worst_ratio
            << " (k<=20, n_max 1e6)";
  return v;
}

Verdict involution() {
  Verdict v;
  const auto& ctx = ctx128();
  const CoeffTable table = CoeffTable::build(50, ctx);
  double worst = 0;
  for (unsigned j = 0; j <= 50; ++j) {
    const BigReal expected = BigReal(static_cast<long>(2 * j + 1), 64) * zeta_even_exact(j + 1).evaluate(ctx);
    const double d = ulp_distance(inverse_binomial_check(table, j), expected, ctx.target_bits());
    worst = std::max(worst, d);
    v.require(d <= 8.0, "j=" + std::to_string(j));
  }
  v.detail << "max " << worst << " ulp over j<=50";
  return v;
}

Verdict truncation() {
  Verdict v;
  const auto& ctx = ctx128();
  const CoeffTable table = CoeffTable::build(CoeffTable::kDefaultKMax, ctx);
  double worst = 0;
  for (const long s : {2L, 4L, 6L, 8L}) {
    const EvalResult r = eval_zeta(BigComplex(s, ctx.working_bits()), table, ctx);
    const double d = ulp_distance(r.value.re, zeta_even_exact(s / 2).evaluate(ctx), ctx.target_bits());
    worst = std::max(worst, d);
    v.require(d <= 8.0 && r.value.im.is_zero(), "value at s=" + std::to_string(s));
    v.require(r.terms_used == static_cast<std::size_t>(s / 2), "terms at s=" + std::to_string(s));
  }
  v.detail << "s=2,4,6,8 use 1,2,3,4 terms; max " << worst << " ulp";
  return v;
}

Verdict continuation_points() {
  Verdict v;
  const auto& ctx = ctx256();
  const BigReal floor_tol = BigReal::parse("1e-12", 64);

  const EvalResult z0 = eval_zeta(at256("0"), table256(), ctx);
  const BigReal e0 = abs(z0.value - BigComplex(BigReal::parse("-0.5", 64)));
  v.require(e0 <= max(z0.tail_estimate, floor_tol), "s=0");

  const EvalResult z3 = eval_zeta(at256("3"), table256(), ctx);
  const OracleResult eta3 = eta_oracle(at256("3"), ctx);
  const BigReal e3 = abs(z3.value - eta3.value);
  v.require(e3 <= max(z3.tail_estimate, floor_tol), "s=3");

  v.detail << "s=0: err " << sci(e0) << ", tail " << sci(z0.tail_estimate) << ", " << z0.terms_used
           << " terms; s=3: err " << sci(e3) << ", tail " << sci(z3.tail_estimate) << ", " << z3.terms_used
           << " terms";
  return v;
}

Verdict convergence_trend() {
  Verdict v;
  const std::vector<std::size_t> checkpoints = {100, 400, 1600};
  for (const char* text : {"0", "-1", "0.5+14.134725i"}) {
    const ConvergenceProfile p = convergence_profile(at256(text), table256(), ctx256(), checkpoints);
    const std::string where = std::string("s=") + text;
    v.require(p.oracle.has_value(), where + " oracle");
    if (!p.oracle) continue;
    v.detail << where << ": errors";
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      const auto& err = p.rows[i].error;
      v.require(err && err->is_finite(), where + " finite error");
      if (!err) continue;
      v.detail << ' ' << sci(*err);
      if (i > 0) v.require(*err <= *p.rows[i - 1].error, where + " non-increasing");
    }
    if (p.rows.front().error && p.rows.back().error) {
      v.require(*p.rows.back().error <= BigReal::parse("0.5", 64) * *p.rows.front().error,
                where + " halving from N=100 to N=1600");
    }
    const BigComplex& last = p.rows.back().partial;
    v.detail << ", final partial re " << sci(last.re, 12) << " |im| " << sci(abs(last.im)) << "; ";
  }
  v.detail << "checkpoints 100, 400, 1600";
  return v;
}

Verdict trivial_zero() {
  Verdict v;
  const EvalResult r = eval_zeta(at256("-2"), table256(), ctx256());
  const BigReal mag = abs(r.value);
  v.require(mag <= max(r.tail_estimate, BigReal::parse("1e-6", 64)), "|zeta(-2)|");
  v.detail << "|zeta(-2)| = " << sci(mag) << ", tail " << sci(r.tail_estimate) << ", " << r.terms_used << " terms";
  return v;
}

Verdict bernoulli_engine() {
  Verdict v;
  const auto rec = bernoulli_recurrence_table(100);
  for (unsigned n = 0; n <= 30; ++n) {
    v.require(bernoulli_double_sum(n) == rec[n], "double sum n=" + std::to_string(n));
  }
  const BernoulliCache cache(100);
  for (unsigned m = 2; m <= 100; m += 2) {
    BigInt den = 1;
    ExactRational frac = cache.at(m);
    for (unsigned p = 2; p <= m + 1; ++p) {
      if (is_prime(p) && m % (p - 1) == 0) {
        den *= p;
        frac += ExactRational(BigInt(1), BigInt(p));
      }
    }
    v.require(cache.at(m).denominator() == den && frac.denominator() == 1 && cache.at(m) == rec[m],
              "denominator of B_" + std::to_string(m));
  }
  v.detail << "double sum = recurrence for n<=30; von Staudt-Clausen for 2n<=100";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  const auto& ctx = ctx128();
  const mpfr_prec_t p = ctx.working_bits();
  const std::array<const char*, 4> re = {"1.25", "2", "3.5", "6"};
  const std::array<const char*, 3> im = {"0", "4.5", "-15"};
  BigReal worst_ratio(0, 64);
  for (const char* a : re) {
    for (const char* b : im) {
      const std::string text = std::string(a) + (b[0] == '-' ? "" : "+") + b + "i";
      const BigComplex s = BigComplex::parse(text, p);
      const OracleResult d = dirichlet_oracle(s, dirichlet_terms_for(s, ctx, 20000), ctx);
      const OracleResult e = eta_oracle(s, ctx);
      const BigReal diff = abs(d.value - e.value);
      const BigReal combined = d.error_bound + e.error_bound;
      worst_ratio = max(worst_ratio, BigReal(diff / combined, 64));
      v.require(diff <= combined, "grid point " + text);
    }
  }
  const BigReal tol = BigReal::parse("1e-" + std::to_string(ctx.target_digits() - 4), 64);
  BigReal worst_residual(0, 64);
  for (const char* text : {"0.3", "0.5", "0.3+3i"}) {
    const BigReal r = functional_equation_residual(BigComplex::parse(text, p), ctx);
    worst_residual = max(worst_residual, BigReal(r, 64));
    v.require(r < tol, std::string("residual at ") + text);
  }
  v.detail << "12 grid points, max |diff|/bounds " << sci(worst_ratio, 9) << "; max residual "
           << sci(worst_residual) << " < " << sci(tol);
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {
      {"coeffs", "--k-max", "30"},
      {"coeffs", "--k-max", "30", "--route", "float", "--format", "json"},
      {"coeffs", "--k-max", "5", "--route", "oracle", "--n-max", "100000"},
      {"coeffs", "--k-max", "10", "--route", "toy"},
      {"eval", "--s", "0", "--s", "3", "--s", "-2", "--s", "0.5+14.134725i", "--s", "1"},
      {"eval", "--s", "2.5-7i", "--format", "json", "--prec-bits", "200"},
      {"verify-tables"},
      {"verify-tables", "--format", "json"},
      {"oracle-compare", "--grid-re", "1.5,2.5,4", "--grid-im", "0,5"},
      {"oracle-compare", "--s", "3", "--s", "0.3+2i", "--format", "json"},
      {"decay-report", "--k-min", "2", "--k-max", "100"},
      {"decay-report", "--k-min", "10", "--k-max", "60", "--format", "json"},
  };
  for (const auto& args : commands) {
    std::ostringstream first, second, err;
    const int s1 = cli::run(args, first, err);
    const int s2 = cli::run(args, second, err);
    std::string label;
    for (const auto& a : args) label += (label.empty() ? "" : " ") + a;
    v.require(s1 == s2 && first.str() == second.str() && !first.str().empty(), label);
  }
  v.detail << commands.size() << " invocations compared byte for byte";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"table reproduction", table_reproduction},
      {"toy collapse", toy_collapse},
      {"three-route coefficient agreement", route_agreement},
      {"binomial involution", involution},
      {"truncation exactness", truncation},
      {"analytic continuation point checks", continuation_points},
      {"convergence trend", convergence_trend},
      {"trivial zeros", trivial_zero},
      {"bernoulli engine", bernoulli_engine},
      {"oracle cross-agreement", oracle_agreement},
      {"determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s %2d %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
