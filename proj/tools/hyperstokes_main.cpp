// Command-line front end: arbitrary-precision evaluation of the scaled gamma
// function's hyperasymptotic expansions, hyperterminant values, smooth
// Stokes-multiplier sweeps and self-verification suites.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperstokes/cli_config.hpp"
#include "hyperstokes/errors.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;

void attach_run_flags(CLI::App* cmd, hyperstokes::cli::RunConfig* run) {
  cmd->add_option("--digits", run->digits,
                  "working decimal precision (>= 30); default: HYPERSTOKES_DIGITS or 50")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", run->tolerance,
                  "relative quadrature tolerance in (0, 1e-4]; default 1e-12");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hyperstokes: scaled-gamma hyperasymptotics, hyperterminants and smooth "
      "Stokes transitions at arbitrary precision"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "read defaults from a TOML-style config file (keys = long option names, "
                 "[subcommand] sections)");

  hyperstokes::cli::EvalRequest eval_req;
  CLI::App* eval = app.add_subcommand(
      "eval", "expand Gamma* (or its reciprocal) at one point and report the remainder");
  attach_run_flags(eval, &eval_req.run);
  eval->add_option("--z-mod", eval_req.z_mod, "modulus of z (positive decimal)");
  eval->add_option("--z-arg", eval_req.z_arg_pi, "angle of z in units of pi");
  eval->add_option("--level", eval_req.level, "re-expansion stages: 0, 1 or 2")
      ->check(CLI::Range(0, 2));
  eval->add_option("-N,--N", eval_req.big_n, "leading truncation index; default floor(2 pi |z|) per stage");
  eval->add_option("-M,--M", eval_req.big_m, "first re-expansion truncation (level >= 1)");
  eval->add_option("-K,--K", eval_req.big_k, "second re-expansion truncation (level >= 2)");
  eval->add_flag("--reciprocal", eval_req.reciprocal, "expand 1/Gamma* instead of Gamma*");

  hyperstokes::cli::SmoothRequest smooth_req;
  CLI::App* smooth = app.add_subcommand(
      "smooth", "sweep the smooth second-stage Stokes multiplier along |z| = const");
  attach_run_flags(smooth, &smooth_req.run);
  smooth->add_option("--absz", smooth_req.absz, "modulus of z along the sweep");
  smooth->add_option("--kind", smooth_req.kind, "s2 (plain series) or s2tilde (reciprocal)");
  smooth->add_option("--theta-min", smooth_req.theta_min_pi,
                     "sweep start, units of pi (default 0.3 for s2, 0.05 for s2tilde)");
  smooth->add_option("--theta-max", smooth_req.theta_max_pi,
                     "sweep end, units of pi (default 0.75 for s2, 0.95 for s2tilde)");
  smooth->add_option("--steps", smooth_req.steps,
                     "number of samples, endpoints included (default 91 / 181)");
  smooth->add_option("--out", smooth_req.out_path, "CSV output path (default: stdout)");

  hyperstokes::cli::TerminantRequest term_req;
  CLI::App* term = app.add_subcommand("terminant", "evaluate a (nested) hyperterminant");
  attach_run_flags(term, &term_req.run);
  term->add_option("--orders", term_req.orders, "comma list of level orders, e.g. 12,7")
      ->required();
  term->add_option("--singulant-args", term_req.singulant_args_pi,
                   "comma list of singulant angles in units of pi, e.g. 0.5,-0.5")
      ->required();
  term->add_option("--singulant-mods", term_req.singulant_mods,
                   "comma list of singulant moduli; omitted: every level 2*pi");
  term->add_option("--z-mod", term_req.z_mod, "modulus of z");
  term->add_option("--z-arg", term_req.z_arg_pi, "angle of z in units of pi");
  term->add_option("--method", term_req.method,
                   "quad (nested contour quadrature) or bell (equal-level closed form)");

  hyperstokes::cli::SmoothingRequest smoothing_req;
  CLI::App* smoothing = app.add_subcommand(
      "smoothing", "term-by-term error-function approximation of a normalized hyperterminant");
  attach_run_flags(smoothing, &smoothing_req.run);
  smoothing->add_option("--phi", smoothing_req.phi_pi,
                        "angle of (singulant * z) in units of pi, inside (-3, 3)");
  smoothing->add_option("--m", smoothing_req.m, "terminant depth m >= 1");
  smoothing->add_option("--absz", smoothing_req.absz, "modulus of z (sets |sigma z| = 2 pi |z|)");
  smoothing->add_option("--variant", smoothing_req.variant, "direct or conjugate");

  hyperstokes::cli::CoeffsRequest coeffs_req;
  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "dump the exact expansion coefficients as numerator/denominator pairs");
  coeffs->add_option("--max", coeffs_req.max, "largest index to emit");
  coeffs->add_option("--format", coeffs_req.format, "csv or json");
  CLI::App* dump = coeffs->add_subcommand("dump", "alias of the bare coeffs command");
  dump->add_option("--max", coeffs_req.max, "largest index to emit");
  dump->add_option("--format", coeffs_req.format, "csv or json");

  hyperstokes::cli::VerifyRequest verify_req;
  CLI::App* verify = app.add_subcommand(
      "verify", "run identity suites and report pass/fail with measured residuals");
  attach_run_flags(verify, &verify_req.run);
  verify->add_option("--suite", verify_req.suite,
                     "coeffs | reference | terminants | smoothing | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*eval) return hyperstokes::cli::run_eval(eval_req, std::cout);
    if (*smooth) return hyperstokes::cli::run_smooth(smooth_req, std::cout);
    if (*term) return hyperstokes::cli::run_terminant(term_req, std::cout);
    if (*smoothing) return hyperstokes::cli::run_smoothing_breakdown(smoothing_req, std::cout);
    if (*coeffs) return hyperstokes::cli::run_coeffs(coeffs_req, std::cout);
    if (*verify) return hyperstokes::cli::run_verify(verify_req, std::cout);
  } catch (const hyperstokes::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const hyperstokes::DomainError& e) {
    std::cerr << "config error (domain): " << e.what() << "\n";
    return kExitConfigError;
  } catch (const hyperstokes::Error& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitConfigError;
}
