#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hyperstokes/cli_config.hpp"
#include "hyperstokes/errors.hpp"
#include "hyperstokes/numbers.hpp"
#include "support/testutil.hpp"

using namespace hyperstokes;
using nlohmann::json;
using testing::check_rel;

namespace {

// Restores (or removes) an environment variable when the scope ends.
struct EnvVarGuard {
  std::string name;
  std::string old_value;
  bool had = false;
  explicit EnvVarGuard(const char* n) : name(n) {
    if (const char* v = std::getenv(n)) {
      had = true;
      old_value = v;
    }
  }
  ~EnvVarGuard() {
    if (had) {
      setenv(name.c_str(), old_value.c_str(), 1);
    } else {
      unsetenv(name.c_str());
    }
  }
};

Complex complex_from_json(const json& j) {
  Real re(j.at("re").get<std::string>());
  Real im(j.at("im").get<std::string>());
  return Complex(re, im);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("angles in units of pi parse to exact rationals") {
  CHECK(cli::parse_pi_units("0.5") == Rational(1, 2));
  CHECK(cli::parse_pi_units("7/20") == Rational(7, 20));
  CHECK(cli::parse_pi_units("-0.35") == Rational(-7, 20));
  CHECK(cli::parse_pi_units("3") == Rational(3));
  CHECK(cli::parse_pi_units("1.25") == Rational(5, 4));
  CHECK_THROWS_AS(cli::parse_pi_units("abc"), ConfigError);
  CHECK_THROWS_AS(cli::parse_pi_units(""), ConfigError);
  CHECK_THROWS_AS(cli::parse_pi_units("1/0"), ConfigError);
}

TEST_CASE("digit count: flag beats environment beats default") {
  EnvVarGuard guard("HYPERSTOKES_DIGITS");

  setenv("HYPERSTOKES_DIGITS", "64", 1);
  CHECK(cli::resolve_digits(40) == 40);
  CHECK(cli::resolve_digits(0) == 64);

  unsetenv("HYPERSTOKES_DIGITS");
  CHECK(cli::resolve_digits(0) == kDefaultDigits);

  setenv("HYPERSTOKES_DIGITS", "not-a-number", 1);
  CHECK_THROWS_AS(cli::resolve_digits(0), ConfigError);
  setenv("HYPERSTOKES_DIGITS", "12", 1);
  CHECK_THROWS_AS(cli::resolve_digits(0), ConfigError);

  unsetenv("HYPERSTOKES_DIGITS");
  CHECK_THROWS_AS(cli::resolve_digits(25), ConfigError);
}

TEST_CASE("quadrature tolerance bounds") {
  PrecisionScope scope(50);
  CHECK(cli::parse_tolerance("") == Real("1e-12"));
  CHECK(cli::parse_tolerance("1e-30") == Real("1e-30"));
  CHECK(cli::parse_tolerance("1e-4") == Real("1e-4"));
  CHECK_THROWS_AS(cli::parse_tolerance("1e-3"), ConfigError);
  CHECK_THROWS_AS(cli::parse_tolerance("0"), ConfigError);
  CHECK_THROWS_AS(cli::parse_tolerance("-1e-9"), ConfigError);
  CHECK_THROWS_AS(cli::parse_tolerance("junk"), ConfigError);
}

TEST_CASE("coefficient table dump round-trips") {
  cli::CoeffsRequest req;
  req.max = 8;
  req.format = "csv";
  std::ostringstream csv;
  CHECK(cli::run_coeffs(req, csv) == 0);
  std::string text = csv.str();
  CHECK(text.rfind("n,gamma_num,gamma_den,a_num,a_den,b2n_num,b2n_den\n", 0) == 0);
  CHECK(text.find("\n1,-1,12,1,12,1,6\n") != std::string::npos);
  CHECK(text.find("\n3,139,51840,1,1260,1,42\n") != std::string::npos);

  req.format = "json";
  std::ostringstream js;
  CHECK(cli::run_coeffs(req, js) == 0);
  json j = json::parse(js.str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 9);
  CHECK(j[1]["gamma_num"] == "-1");
  CHECK(j[1]["gamma_den"] == "12");
  CHECK(j[3]["gamma_num"] == "139");
  CHECK(j[3]["a_den"] == "1260");

  req.format = "yaml";
  std::ostringstream bad;
  CHECK_THROWS_AS(cli::run_coeffs(req, bad), ConfigError);
}

TEST_CASE("eval subcommand reproduces the frozen level-0 remainder") {
  PrecisionScope scope(70);
  cli::EvalRequest req;
  req.run.digits = 60;
  req.z_mod = "2";
  req.z_arg_pi = "0.4";
  req.level = 0;
  req.big_n = 37;

  std::ostringstream out;
  REQUIRE(cli::run_eval(req, out) == 0);
  json j = json::parse(out.str());
  CHECK(j["command"] == "eval");
  CHECK(j["series"] == "plain");
  CHECK(j["z_arg_pi"] == "2/5");
  CHECK(j["level"] == 0);
  CHECK(j["N"] == 37);
  CHECK(j["digits"] == 60);
  CHECK(j["digits_lost"].get<int>() > 0);
  check_rel(complex_from_json(j["remainder"]), frozen::r_n_small, eps_for(25),
            "plain remainder via CLI");

  req.reciprocal = true;
  std::ostringstream out2;
  REQUIRE(cli::run_eval(req, out2) == 0);
  json j2 = json::parse(out2.str());
  CHECK(j2["series"] == "reciprocal");
  check_rel(complex_from_json(j2["remainder"]), frozen::rt_n_small, eps_for(25),
            "reciprocal remainder via CLI");

  cli::EvalRequest bad = req;
  bad.level = 3;
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::run_eval(bad, sink), ConfigError);
  bad = req;
  bad.big_n = 0;
  CHECK_THROWS_AS(cli::run_eval(bad, sink), ConfigError);
  bad = req;
  bad.z_mod = "-1";
  CHECK_THROWS_AS(cli::run_eval(bad, sink), ConfigError);
}

TEST_CASE("smooth subcommand emits the sample grid as CSV") {
  cli::SmoothRequest req;
  req.absz = "2";
  req.kind = "s2";
  req.theta_min_pi = "0.45";
  req.theta_max_pi = "0.55";
  req.steps = 3;

  std::ostringstream out;
  REQUIRE(cli::run_smooth(req, out) == 0);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "theta_over_pi,re_S,im_S,N,M,digits_used");
  unsigned rows = 0;
  std::string row;
  while (std::getline(lines, row)) {
    if (row.empty()) continue;
    ++rows;
    CHECK(row.find(",25,12,") != std::string::npos);
  }
  CHECK(rows == 3);

  cli::SmoothRequest bad = req;
  bad.kind = "sideways";
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::run_smooth(bad, sink), ConfigError);
  bad = req;
  bad.theta_max_pi = "1.5";
  CHECK_THROWS_AS(cli::run_smooth(bad, sink), ConfigError);
  bad = req;
  bad.theta_min_pi = "0.6";
  CHECK_THROWS_AS(cli::run_smooth(bad, sink), ConfigError);
}

TEST_CASE("terminant subcommand: quadrature and exponential routes agree") {
  PrecisionScope scope(55);
  cli::TerminantRequest req;
  req.run.digits = 50;
  req.orders = "6,6";
  req.singulant_args_pi = "0.5,0.5";
  req.z_mod = "2";
  req.z_arg_pi = "0.2";
  req.run.tolerance = "1e-30";
  req.method = "quad";

  std::ostringstream quad_out;
  REQUIRE(cli::run_terminant(req, quad_out) == 0);
  json jq = json::parse(quad_out.str());
  CHECK(jq["levels"] == 2);
  Complex quad_value(Real(jq["value_re"].get<std::string>()),
                     Real(jq["value_im"].get<std::string>()));

  req.method = "bell";
  std::ostringstream bell_out;
  REQUIRE(cli::run_terminant(req, bell_out) == 0);
  json jb = json::parse(bell_out.str());
  Complex bell_value(Real(jb["value_re"].get<std::string>()),
                     Real(jb["value_im"].get<std::string>()));

  check_rel(quad_value, bell_value, eps_for(24), "CLI dual-route agreement");
  check_rel(quad_value, frozen::f2_equal_anchor, eps_for(24), "CLI vs frozen anchor");

  std::ostringstream sink;
  cli::TerminantRequest bad = req;
  bad.method = "guess";
  CHECK_THROWS_AS(cli::run_terminant(bad, sink), ConfigError);
  bad = req;
  bad.singulant_args_pi = "0.5";
  CHECK_THROWS_AS(cli::run_terminant(bad, sink), ConfigError);
  bad = req;
  bad.orders = "6,5";
  bad.method = "bell";
  CHECK_THROWS_AS(cli::run_terminant(bad, sink), ConfigError);
}

TEST_CASE("smoothing breakdown on the transition line shows the exact plateau") {
  PrecisionScope scope(55);
  cli::SmoothingRequest req;
  req.run.digits = 50;
  req.phi_pi = "1";
  req.m = 2;
  req.absz = "5";
  req.variant = "direct";

  std::ostringstream out;
  REQUIRE(cli::run_smoothing_breakdown(req, out) == 0);
  json j = json::parse(out.str());
  CHECK(j["m"] == 2);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["stokes_line_exact_sum"] == "3/8");
  Complex value = complex_from_json(j["value"]);
  CHECK(abs(value - Real(3) / 8) < eps_for(35));

  req.variant = "conjugate";
  std::ostringstream out2;
  REQUIRE(cli::run_smoothing_breakdown(req, out2) == 0);
  json j2 = json::parse(out2.str());
  CHECK(j2["stokes_line_exact_sum"] == "-1/8");
  Complex value2 = complex_from_json(j2["value"]);
  CHECK(abs(value2 + Real(1) / 8) < eps_for(35));

  cli::SmoothingRequest bad = req;
  bad.m = 0;
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::run_smoothing_breakdown(bad, sink), ConfigError);
}

TEST_CASE("verify subcommand runs its embedded checks") {
  cli::VerifyRequest req;
  req.run.digits = 40;
  req.suite = "coeffs";
  std::ostringstream out;
  CHECK(cli::run_verify(req, out) == 0);
  std::string text = out.str();
  CHECK(text.find("[ ok ]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
  CHECK(text.find("verification passed") != std::string::npos);

  req.suite = "smoothing";
  std::ostringstream out2;
  CHECK(cli::run_verify(req, out2) == 0);
  CHECK(out2.str().find("[FAIL]") == std::string::npos);

  req.suite = "bogus";
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::run_verify(req, sink), ConfigError);
}

TEST_SUITE_END();
