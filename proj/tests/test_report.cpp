#include <doctest.h>

#include <cmath>
#include <limits>

#include "pertbern/error.hpp"
#include "pertbern/report.hpp"

using namespace pertbern;

namespace {

BoundReport sample() {
  BoundReport r;
  r.theorem = TheoremId::K_M1_DIRECT;
  r.function = "exp";
  r.n = 8;
  r.scheme = "a1=0";
  r.x_grid = {0.0, 0.1, 1.0 / 3.0};
  r.lhs = {1e-17, 0.30000000000000004, std::numeric_limits<double>::quiet_NaN()};
  r.rhs = {2.0, 0.5, 1.0};
  r.worst_margin = 0.19999999999999996;
  r.moduli_exact = false;
  r.status = CheckStatus::Inconclusive;
  r.note = "quoted \"note\", with comma";
  return r;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_shortest(0.28125) == "0.28125");
  CHECK(format_shortest(0.1) == "0.1");
}

TEST_CASE("bound report CSV layout") {
  BoundReport skipped;
  skipped.theorem = TheoremId::VORON_B_M1;
  skipped.function = "abs_half";
  skipped.n = 8;
  const std::string csv = bound_reports_csv({sample(), skipped});
  CHECK(csv.rfind("theorem,function,n,scheme,x,lhs,rhs,margin,moduli_exact,status\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.find("K_M1_DIRECT,exp,8,a1=0,0,1.0000000000000001e-17,2,2,false,inconclusive\n") !=
        std::string::npos);
  CHECK(csv.find("VORON_B_M1,abs_half,8,none,,,,,true,skipped\n") != std::string::npos);
  CHECK(bound_reports_csv({}) == "theorem,function,n,scheme,x,lhs,rhs,margin,moduli_exact,status\n");
}

TEST_CASE("bound report JSON round-trips byte for byte") {
  const std::string text = bound_reports_json({sample()});
  CHECK(text.find("null") != std::string::npos);
  const auto parsed = parse_bound_reports_json(text);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].note == sample().note);
  CHECK(parsed[0].lhs[1] == 0.30000000000000004);
  CHECK(std::isnan(parsed[0].lhs[2]));
  CHECK(bound_reports_json(parsed) == text);
}

TEST_CASE("convergence report formats") {
  ConvergenceReport r;
  r.op = {Family::Genuine, Variant::M1};
  r.function = "sin_pi";
  r.scheme = "a1=0";
  r.x = 0.3;
  r.n_list = {16, 32, 64, 128};
  r.scaled_error = {0.1, 0.05, 0.025, 0.0125};
  r.fitted_rate = -1.0;
  r.limit_formula = "X f'' + X'(1+L1) f'/2";
  const std::string csv = convergence_reports_csv({r});
  CHECK(csv.rfind("operator,function,x,n,scaled_error,fitted_rate\n", 0) == 0);
  CHECK(csv.find("genuine-m1,sin_pi,0.29999999999999999,16,0.10000000000000001,-1\n") != std::string::npos);
  const std::string text = convergence_reports_json({r});
  CHECK(convergence_reports_json(parse_convergence_reports_json(text)) == text);
  r.fitted_rate.reset();
  const std::string none = convergence_reports_json({r});
  CHECK_FALSE(parse_convergence_reports_json(none)[0].fitted_rate.has_value());
  CHECK(convergence_reports_csv({r}).find(",0.10000000000000001,\n") != std::string::npos);
}

TEST_CASE("malformed JSON is a config error") {
  CHECK_THROWS_AS(parse_bound_reports_json("{"), ConfigError);
  CHECK_THROWS_AS(parse_bound_reports_json("{}"), ConfigError);
  CHECK_THROWS_AS(parse_bound_reports_json("[{\"theorem\": \"B_CLASSIC_DIRECT\"}]"), ConfigError);
}
