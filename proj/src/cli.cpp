#include "hypzeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <optional>
#include <sstream>
#include <string_view>

#include "hypzeta/coefficients.hpp"
#include "hypzeta/diagnostics.hpp"
#include "hypzeta/errors.hpp"
#include "hypzeta/oracles.hpp"
#include "hypzeta/parallel.hpp"
#include "hypzeta/series.hpp"

namespace hypzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  unsigned prec_bits = PrecisionContext::kDefaultTargetBits;
  unsigned guard_bits = PrecisionContext::kDefaultGuardBits;
  std::string format = "csv";

  PrecisionContext ctx(std::size_t max_terms = PrecisionContext::kDefaultMaxTerms) const {
    return PrecisionContext(prec_bits, guard_bits, max_terms);
  }
};

/// Rows plus optional trailing summary, written as CSV or as one JSON record.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<std::string> columns;
  std::vector<Json> rows;
  std::vector<std::string> summary_columns;
  Json summary;
  Json error;
  std::vector<std::string> warnings;
};

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (const auto& item : v) {
      if (!joined.empty()) joined += ';';
      joined += csv_cell(item);
    }
    return joined;
  }
  return v.dump();
}

void write_csv_block(std::ostream& out, const std::vector<std::string>& columns,
                     const std::vector<Json>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << (row.contains(columns[i]) ? csv_cell(row[columns[i]]) : "");
    }
    out << '\n';
  }
}

void emit(const Report& report, const CommonOptions& common, std::ostream& out) {
  if (common.format == "json") {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = report.command;
    doc["inputs"] = report.inputs;
    const PrecisionContext ctx = common.ctx();
    doc["precision"] = {{"target_bits", ctx.target_bits()},
                        {"guard_bits", ctx.guard_bits()},
                        {"working_bits", ctx.working_bits()}};
    doc["results"] = report.rows;
    if (!report.summary.is_null()) doc["summary"] = report.summary;
    if (!report.error.is_null()) doc["error"] = report.error;
    doc["warnings"] = report.warnings;
    out << doc.dump(2) << '\n';
    return;
  }
  if (!report.error.is_null() && report.rows.empty()) {
    write_csv_block(out, {"error", "s", "message"}, {report.error});
    return;
  }
  write_csv_block(out, report.columns, report.rows);
  if (!report.summary.is_null()) {
    out << '\n';
    write_csv_block(out, report.summary_columns, {report.summary});
  }
}

std::vector<std::string> warning_names(const std::vector<Warning>& ws) {
  std::vector<std::string> out;
  for (const Warning w : ws) out.emplace_back(to_string(w));
  return out;
}

Json precision_inputs(const CommonOptions& common) {
  return {{"prec_bits", common.prec_bits}, {"guard_bits", common.guard_bits}, {"format", common.format}};
}

// ---- coeffs ---------------------------------------------------------------

struct CoeffsOptions {
  unsigned k_max = CoeffTable::kDefaultKMax;
  std::string route = "exact";
  std::uint64_t n_max = CoeffTable::kDefaultOracleNMax;
};

int cmd_coeffs(const CoeffsOptions& opt, const CommonOptions& common, std::ostream& out) {
  const PrecisionContext ctx = common.ctx();
  const CoeffRoute route = parse_route(opt.route);
  const CoeffTable table = CoeffTable::build(opt.k_max, ctx, route, nullptr, opt.n_max);

  Report report;
  report.command = "coeffs";
  report.inputs = precision_inputs(common);
  report.inputs["k_max"] = opt.k_max;
  report.inputs["route"] = opt.route;
  if (route == CoeffRoute::oracle) report.inputs["n_max"] = opt.n_max;
  report.columns = {"k", "A_k", "route", "target_bits", "working_bits"};
  if (route == CoeffRoute::oracle) report.columns.push_back("tail_bound");
  if (route == CoeffRoute::exact) report.columns.push_back("pi_polynomial");

  for (unsigned k = 0; k <= opt.k_max; ++k) {
    Json row = {{"k", k},
                {"A_k", table.rounded(k).to_string()},
                {"route", std::string(to_string(route))},
                {"target_bits", ctx.target_bits()},
                {"working_bits", ctx.working_bits()}};
    if (route == CoeffRoute::oracle) row["tail_bound"] = table.bound(k).to_string();
    if (route == CoeffRoute::exact) row["pi_polynomial"] = table.exact(k).to_string();
    report.rows.push_back(std::move(row));
  }
  emit(report, common, out);
  return kOk;
}

// ---- eval -----------------------------------------------------------------

struct EvalOptions {
  std::vector<std::string> points;
  std::size_t max_terms = PrecisionContext::kDefaultMaxTerms;
  unsigned k_max = CoeffTable::kDefaultKMax;
};

BigComplex parse_point(const std::string& text, const PrecisionContext& ctx) {
  try {
    return BigComplex::parse(text, ctx.working_bits());
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--s", e.what());
  }
}

int cmd_eval(const EvalOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const PrecisionContext ctx = common.ctx(opt.max_terms);
  std::vector<BigComplex> points;
  for (const auto& p : opt.points) points.push_back(parse_point(p, ctx));

  const CoeffTable table = CoeffTable::build(opt.k_max, ctx);
  std::vector<Json> rows(points.size());
  std::vector<char> pole(points.size(), 0);
  detail::parallel_for(points.size(), [&](std::size_t i) {
    try {
      const EvalResult r = eval_zeta(points[i], table, ctx);
      rows[i] = {{"s", opt.points[i]},
                 {"value_re", r.value.re.to_string()},
                 {"value_im", r.value.im.to_string()},
                 {"terms_used", r.terms_used},
                 {"tail_estimate", r.tail_estimate.to_string()},
                 {"warnings", warning_names(r.warnings)},
                 {"error", nullptr}};
    } catch (const PoleError& e) {
      pole[i] = 1;
      rows[i] = {{"s", opt.points[i]}, {"value_re", nullptr}, {"value_im", nullptr},
                 {"terms_used", nullptr}, {"tail_estimate", nullptr},
                 {"warnings", Json::array()}, {"error", "pole"}};
    }
  });

  Report report;
  report.command = "eval";
  report.inputs = precision_inputs(common);
  report.inputs["s"] = opt.points;
  report.inputs["max_terms"] = opt.max_terms;
  report.inputs["k_max"] = opt.k_max;
  report.columns = {"s", "value_re", "value_im", "terms_used", "tail_estimate", "warnings", "error"};
  report.rows = rows;

  int status = kOk;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (pole[i]) {
      status = kPoleError;
      report.error = {{"kind", "pole"}, {"s", opt.points[i]}, {"message", "zeta has a simple pole at s = 1"}};
      err << "eval: pole at s = " << opt.points[i] << '\n';
    }
  }
  emit(report, common, out);
  return status;
}

// ---- verify-tables --------------------------------------------------------

constexpr std::size_t kTableSize = 5;

// Rows j = 0..4, columns k = 0..4, to the printed number of decimals.
constexpr std::array<std::array<std::string_view, kTableSize>, kTableSize> kIntegerTable = {{
    {"1", "1", "1", "1", "1"},
    {"0", "-3", "-6", "-9", "-12"},
    {"0", "0", "5", "15", "30"},
    {"0", "0", "0", "-7", "-28"},
    {"0", "0", "0", "0", "9"},
}};
constexpr std::array<std::string_view, kTableSize> kIntegerSums = {"1", "-2", "0", "0", "0"};

constexpr std::array<std::array<std::string_view, kTableSize>, kTableSize> kZetaTable = {{
    {"1.645", "1.645", "1.645", "1.645", "1.645"},
    {"0", "-3.25", "-6.49", "-9.74", "-12.99"},
    {"0", "0", "5.09", "15.26", "30.52"},
    {"0", "0", "0", "-7.03", "-28.11"},
    {"0", "0", "0", "0", "9.01"},
}};
constexpr std::array<std::string_view, kTableSize> kZetaSums = {"1.645", "-1.60", "0.238", "0.136", "0.0721"};

int printed_decimals(std::string_view printed) {
  const auto dot = printed.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

int cmd_verify_tables(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const PrecisionContext ctx = common.ctx();
  const CoeffTable table = CoeffTable::build(kTableSize - 1, ctx);

  Report report;
  report.command = "verify-tables";
  report.inputs = precision_inputs(common);
  report.columns = {"table", "k", "j", "computed", "rounded", "printed", "match"};
  int mismatches = 0;

  auto add = [&](std::string_view name, unsigned k, const Json& j, const BigReal& value,
                 std::string_view printed) {
    const std::string rounded = value.to_fixed(printed_decimals(printed));
    const bool match = rounded == printed;
    if (!match) {
      ++mismatches;
      err << "verify-tables: mismatch in " << name << " table at k=" << k << ", j=" << csv_cell(j)
          << ": computed " << rounded << ", printed " << printed << '\n';
    }
    report.rows.push_back({{"table", name},
                           {"k", k},
                           {"j", j},
                           {"computed", value.to_string()},
                           {"rounded", rounded},
                           {"printed", std::string(printed)},
                           {"match", match}});
  };

  const mpfr_prec_t p = ctx.working_bits();
  for (unsigned j = 0; j < kTableSize; ++j) {
    for (unsigned k = 0; k < kTableSize; ++k) {
      const BigReal cell = j <= k ? table_term(k, j, false, ctx) : BigReal(p);
      add("integer", k, j, cell, kIntegerTable[j][k]);
    }
  }
  for (unsigned k = 0; k < kTableSize; ++k) add("integer", k, "sum", BigReal(a_toy(k), p), kIntegerSums[k]);
  for (unsigned j = 0; j < kTableSize; ++j) {
    for (unsigned k = 0; k < kTableSize; ++k) {
      const BigReal cell = j <= k ? table_term(k, j, true, ctx) : BigReal(p);
      add("zeta", k, j, cell, kZetaTable[j][k]);
    }
  }
  for (unsigned k = 0; k < kTableSize; ++k) add("zeta", k, "sum", table.rounded(k), kZetaSums[k]);

  report.summary_columns = {"cells", "mismatches"};
  report.summary = {{"cells", report.rows.size()}, {"mismatches", mismatches}};
  emit(report, common, out);
  return mismatches == 0 ? kOk : kMismatch;
}

// ---- oracle-compare -------------------------------------------------------

struct CompareOptions {
  std::vector<std::string> points;
  std::vector<std::string> grid_re;
  std::vector<std::string> grid_im;
  std::size_t max_terms = PrecisionContext::kDefaultMaxTerms;
  unsigned k_max = CoeffTable::kDefaultKMax;
};

int cmd_oracle_compare(const CompareOptions& opt, const CommonOptions& common, std::ostream& out,
                       std::ostream& err) {
  const PrecisionContext ctx = common.ctx(opt.max_terms);
  std::vector<std::string> labels = opt.points;
  if (!opt.grid_re.empty() || !opt.grid_im.empty()) {
    const std::vector<std::string> im = opt.grid_im.empty() ? std::vector<std::string>{"0"} : opt.grid_im;
    if (opt.grid_re.empty()) throw CLI::ValidationError("--grid-re", "required with --grid-im");
    for (const auto& re : opt.grid_re) {
      for (const auto& i : im) {
        labels.push_back(i.front() == '-' ? re + i + "i" : re + "+" + i + "i");
      }
    }
  }
  if (labels.empty()) throw CLI::ValidationError("oracle-compare", "no points given");
  std::vector<BigComplex> points;
  for (const auto& l : labels) points.push_back(parse_point(l, ctx));

  const CoeffTable table = CoeffTable::build(opt.k_max, ctx);
  std::vector<Json> rows(points.size());
  std::vector<int> verdict(points.size(), 0);  // 0 skipped, 1 within, 2 exceeded
  detail::parallel_for(points.size(), [&](std::size_t i) {
    Json row = {{"s", labels[i]}};
    std::optional<OracleResult> oracle;
    std::optional<EvalResult> expansion;
    try {
      oracle = best_oracle(points[i], ctx, true);
      expansion = eval_zeta(points[i], table, ctx);
    } catch (const Error&) {
      oracle.reset();
    }
    if (!oracle || !expansion) {
      row["oracle_method"] = "none";
      rows[i] = std::move(row);
      return;
    }
    const BigReal diff(abs(expansion->value - oracle->value), 53);
    const BigReal allowance = ldexp(max(BigReal(abs(oracle->value), 53), BigReal(1, 53)),
                                    -static_cast<long>(ctx.target_bits()));
    const BigReal combined = expansion->tail_estimate + oracle->error_bound + allowance;
    const bool within = diff <= combined;
    verdict[i] = within ? 1 : 2;
    row["expansion_re"] = expansion->value.re.to_string();
    row["expansion_im"] = expansion->value.im.to_string();
    row["oracle_re"] = oracle->value.re.to_string();
    row["oracle_im"] = oracle->value.im.to_string();
    row["oracle_method"] = std::string(to_string(oracle->method));
    row["oracle_rigor"] = std::string(to_string(oracle->rigor));
    row["abs_diff"] = diff.to_string();
    row["tail_estimate"] = expansion->tail_estimate.to_string();
    row["oracle_bound"] = oracle->error_bound.to_string();
    row["within_bounds"] = within;
    rows[i] = std::move(row);
  });

  Report report;
  report.command = "oracle-compare";
  report.inputs = precision_inputs(common);
  report.inputs["s"] = labels;
  report.inputs["max_terms"] = opt.max_terms;
  report.inputs["k_max"] = opt.k_max;
  report.columns = {"s",           "expansion_re", "expansion_im", "oracle_re",    "oracle_im",
                    "oracle_method", "oracle_rigor", "abs_diff",   "tail_estimate", "oracle_bound",
                    "within_bounds"};
  report.rows = rows;

  const auto compared = std::count_if(verdict.begin(), verdict.end(), [](int v) { return v != 0; });
  if (compared == 0) {
    err << "oracle-compare: no point lies in an oracle's region\n";
    return kUsageError;
  }
  int status = kOk;
  for (std::size_t i = 0; i < verdict.size(); ++i) {
    if (verdict[i] == 0) err << "oracle-compare: no oracle at s = " << labels[i] << '\n';
    if (verdict[i] == 2) {
      err << "oracle-compare: difference exceeds combined bounds at s = " << labels[i] << '\n';
      status = kMismatch;
    }
  }
  emit(report, common, out);
  return status;
}

// ---- decay-report ---------------------------------------------------------

struct DecayOptions {
  unsigned k_min = 2;
  unsigned k_max = CoeffTable::kDefaultKMax;
  std::string route = "exact";
};

int cmd_decay_report(const DecayOptions& opt, const CommonOptions& common, std::ostream& out) {
  const PrecisionContext ctx = common.ctx();
  const CoeffRoute route = parse_route(opt.route);
  const CoeffTable table = CoeffTable::build(opt.k_max, ctx, route);
  const DecayReport decay = decay_report(table, opt.k_min, opt.k_max);

  Report report;
  report.command = "decay-report";
  report.inputs = precision_inputs(common);
  report.inputs["k_min"] = opt.k_min;
  report.inputs["k_max"] = opt.k_max;
  report.inputs["route"] = opt.route;
  report.columns = {"k", "magnitude"};
  for (unsigned k = opt.k_min; k <= opt.k_max; ++k) {
    report.rows.push_back({{"k", k}, {"magnitude", decay.magnitudes[k - opt.k_min].to_string()}});
  }
  report.summary_columns = {"loglog_slope", "fitted_points", "envelope_monotone", "strictly_decreasing"};
  std::ostringstream slope;
  slope.precision(17);
  slope << decay.loglog_slope;
  report.summary = {{"loglog_slope", slope.str()},
                    {"fitted_points", decay.fitted_points},
                    {"envelope_monotone", decay.envelope_monotone},
                    {"strictly_decreasing", decay.strictly_decreasing}};
  emit(report, common, out);
  return kOk;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--prec-bits", common.prec_bits, "Target precision in bits")
      ->check(CLI::Range(PrecisionContext::kMinTargetBits, 1u << 20));
  cmd->add_option("--guard-bits", common.guard_bits, "Extra working bits")->check(CLI::Range(0u, 1u << 16));
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Globally convergent hypergeometric-like expansion of the Riemann zeta function", "hypzeta"};
  app.require_subcommand(1);

  CommonOptions common;
  CoeffsOptions coeffs;
  EvalOptions eval;
  CompareOptions compare;
  DecayOptions decay;

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Tabulate the expansion coefficients A_k");
  add_common(coeffs_cmd, common);
  coeffs_cmd->add_option("--k-max", coeffs.k_max, "Largest k")->check(CLI::Range(0u, 100000u));
  coeffs_cmd->add_option("--route", coeffs.route, "exact | float | oracle | toy")
      ->check(CLI::IsMember({"exact", "float", "oracle", "toy"}));
  coeffs_cmd->add_option("--n-max", coeffs.n_max, "Lattice cutoff for the oracle route")
      ->check(CLI::Range(std::uint64_t{10}, std::uint64_t{1} << 40));

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate zeta(s) by the expansion");
  add_common(eval_cmd, common);
  eval_cmd->add_option("--s", eval.points, "Complex point a+bi (repeatable)")->required();
  eval_cmd->add_option("--max-terms", eval.max_terms, "Series length cap")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
  eval_cmd->add_option("--k-max", eval.k_max, "Coefficient table size")->check(CLI::Range(1u, 100000u));

  auto* verify_cmd = app.add_subcommand("verify-tables", "Regenerate and check the reference tables");
  add_common(verify_cmd, common);

  auto* compare_cmd = app.add_subcommand("oracle-compare", "Compare the expansion with classical oracles");
  add_common(compare_cmd, common);
  compare_cmd->add_option("--s", compare.points, "Complex point a+bi (repeatable)");
  compare_cmd->add_option("--grid-re", compare.grid_re, "Real parts of a grid")->delimiter(',');
  compare_cmd->add_option("--grid-im", compare.grid_im, "Imaginary parts of a grid")->delimiter(',');
  compare_cmd->add_option("--max-terms", compare.max_terms, "Series length cap")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
  compare_cmd->add_option("--k-max", compare.k_max, "Coefficient table size")->check(CLI::Range(1u, 100000u));

  auto* decay_cmd = app.add_subcommand("decay-report", "Describe the decay of |A_k|");
  add_common(decay_cmd, common);
  decay_cmd->add_option("--k-min", decay.k_min, "First k")->check(CLI::Range(2u, 100000u));
  decay_cmd->add_option("--k-max", decay.k_max, "Last k")->check(CLI::Range(3u, 100000u));
  decay_cmd->add_option("--route", decay.route, "exact | toy")->check(CLI::IsMember({"exact", "toy"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (coeffs_cmd->parsed()) return cmd_coeffs(coeffs, common, out);
    if (eval_cmd->parsed()) return cmd_eval(eval, common, out, err);
    if (verify_cmd->parsed()) return cmd_verify_tables(common, out, err);
    if (compare_cmd->parsed()) return cmd_oracle_compare(compare, common, out, err);
    if (decay_cmd->parsed()) {
      if (decay.k_min >= decay.k_max) throw CLI::ValidationError("--k-min", "must be below --k-max");
      return cmd_decay_report(decay, common, out);
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DegenerateDataError& e) {
    err << "degenerate data: " << e.what() << '\n';
    return kDegenerateData;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kPoleError;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kUsageError;
}

}  // namespace hypzeta::cli
