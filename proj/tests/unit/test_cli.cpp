#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "hypzeta/cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = hypzeta::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST_CASE("coeffs float route at 64 bits") {
  const Outcome r = run({"coeffs", "--k-max", "4", "--route", "float", "--prec-bits", "64", "--format", "csv"});
  REQUIRE(r.status == hypzeta::cli::kOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "k,A_k,route,target_bits,working_bits");
  CHECK(rows[1].rfind("0,1.6449", 0) == 0);
  CHECK(rows[2].rfind("1,-1.602", 0) == 0);
  CHECK(rows[3].rfind("2,0.2377", 0) == 0);
  CHECK(rows[4].rfind("3,0.1356", 0) == 0);
  CHECK(rows[5].rfind("4,0.0721", 0) == 0);
  CHECK(rows[5].find(",float,64,96") != std::string::npos);
}

TEST_CASE("coeffs exact route writes the pi polynomial") {
  const Outcome r = run({"coeffs", "--k-max", "0", "--route", "exact"});
  REQUIRE(r.status == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "k,A_k,route,target_bits,working_bits,pi_polynomial");
  CHECK(rows[1].ends_with(",exact,128,160,1/6 * pi^2"));
}

TEST_CASE("eval") {
  const Outcome two = run({"eval", "--s", "2"});
  REQUIRE(two.status == 0);
  CHECK(lines(two.out)[1].rfind("2,1.6449340668", 0) == 0);
  CHECK(lines(two.out)[1].find(",0,1,0,,") != std::string::npos);

  const Outcome pole = run({"eval", "--s", "1", "--format", "json"});
  CHECK(pole.status == hypzeta::cli::kPoleError);
  CHECK(pole.out.find("\"kind\": \"pole\"") != std::string::npos);
  CHECK_FALSE(pole.err.empty());

  const Outcome csv_pole = run({"eval", "--s", "1"});
  CHECK(csv_pole.status == 3);
  CHECK(lines(csv_pole.out)[1] == "1,,,,,,pole");
}

TEST_CASE("verify-tables passes") {
  const Outcome r = run({"verify-tables"});
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("zeta,4,2,") != std::string::npos);
  CHECK(r.out.find(",30.52,30.52,true") != std::string::npos);
  CHECK(r.out.find(",false") == std::string::npos);
  CHECK(lines(r.out).back() == "60,0");
}

TEST_CASE("oracle-compare") {
  const Outcome grid = run({"oracle-compare", "--grid-re", "1.5,2.5", "--grid-im", "0,5"});
  CHECK(grid.status == 0);
  CHECK(lines(grid.out).size() == 5);
  const Outcome two = run({"oracle-compare", "--s", "2"});
  CHECK(two.status == 0);
  CHECK(lines(two.out)[1].find(",eta,rigorous,0,0,") != std::string::npos);
  CHECK(run({"oracle-compare", "--s", "-2.5"}).status == hypzeta::cli::kUsageError);
  CHECK(run({"oracle-compare"}).status == hypzeta::cli::kUsageError);
}

TEST_CASE("decay-report") {
  const Outcome r = run({"decay-report", "--k-min", "2", "--k-max", "5"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("loglog_slope,fitted_points,envelope_monotone,strictly_decreasing") != std::string::npos);
  CHECK(lines(r.out).back().ends_with(",4,true,true"));
  CHECK(run({"decay-report", "--k-min", "2", "--k-max", "50", "--route", "toy"}).status ==
        hypzeta::cli::kDegenerateData);
  CHECK(run({"decay-report", "--k-min", "9", "--k-max", "5"}).status == hypzeta::cli::kUsageError);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).status == hypzeta::cli::kUsageError);
  CHECK(run({"frobnicate"}).status == hypzeta::cli::kUsageError);
  CHECK(run({"coeffs", "--route", "fast"}).status == hypzeta::cli::kUsageError);
  CHECK(run({"coeffs", "--prec-bits", "8"}).status == hypzeta::cli::kUsageError);
  CHECK(run({"coeffs", "--format", "xml"}).status == hypzeta::cli::kUsageError);
  CHECK(run({"eval", "--s", "one"}).status == hypzeta::cli::kUsageError);
  CHECK(run({"eval"}).status == hypzeta::cli::kUsageError);
  const Outcome help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("oracle-compare") != std::string::npos);
}
