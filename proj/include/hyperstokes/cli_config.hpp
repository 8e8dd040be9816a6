#pragma once

#include <iosfwd>
#include <string>

#include "hyperstokes/numbers.hpp"

namespace hyperstokes::cli {

// Run-wide settings shared by every subcommand. Flags arrive as strings so
// that values are parsed once, at full precision, after the digit count is
// known. Validation happens in resolve()/parse_tolerance; invalid settings
// raise ConfigError (process exit code 2).
struct RunConfig {
  unsigned digits = 0;           // 0: fall back to HYPERSTOKES_DIGITS, then default
  std::string tolerance = "";    // "": default 1e-12; must lie in (0, 1e-4]
};

// Effective decimal digit count: explicit flag beats the HYPERSTOKES_DIGITS
// environment variable, which beats the library default. Throws ConfigError
// when the winner is below the 30-digit minimum or the variable is malformed.
unsigned resolve_digits(unsigned flag_value);

// Parses and validates the quadrature tolerance: must be a positive decimal
// no larger than 1e-4. Empty selects the default 1e-12.
Real parse_tolerance(const std::string& s);

// Exact rational from a decimal or fraction literal ("0.35", "-1.5", "7/20").
// Used for all angle flags, which are given in units of pi.
Rational parse_pi_units(const std::string& s);

struct EvalRequest {
  RunConfig run;
  std::string z_mod = "5";
  std::string z_arg_pi = "0";  // angle of z in units of pi
  unsigned level = 0;          // 0, 1 or 2 re-expansion stages
  long big_n = -1;             // -1: scheduled automatically from |z|
  long big_m = -1;
  long big_k = -1;
  bool reciprocal = false;     // expand 1/Gamma* instead of Gamma*
};
int run_eval(const EvalRequest& req, std::ostream& out);

struct SmoothRequest {
  RunConfig run;
  std::string absz = "5";
  std::string kind = "s2";      // s2 | s2tilde
  std::string theta_min_pi = "";  // "": per-kind default sweep range
  std::string theta_max_pi = "";
  unsigned steps = 0;             // number of samples; 0: per-kind default
  std::string out_path = "";      // "": write CSV to stdout
};
int run_smooth(const SmoothRequest& req, std::ostream& out);

struct TerminantRequest {
  RunConfig run;
  std::string orders;             // comma list, e.g. "12,7"
  std::string singulant_args_pi;  // comma list in units of pi, e.g. "0.5,-0.5"
  std::string singulant_mods = "";  // comma list; "": every level 2*pi
  std::string z_mod = "5";
  std::string z_arg_pi = "0";
  std::string method = "quad";  // quad | bell
};
int run_terminant(const TerminantRequest& req, std::ostream& out);

struct SmoothingRequest {
  RunConfig run;
  std::string phi_pi = "1";  // angle of (singulant * z) in units of pi
  unsigned m = 2;
  std::string absz = "5";
  std::string variant = "direct";  // direct | conjugate
};
int run_smoothing_breakdown(const SmoothingRequest& req, std::ostream& out);

struct CoeffsRequest {
  unsigned max = 8;
  std::string format = "csv";  // csv | json
};
int run_coeffs(const CoeffsRequest& req, std::ostream& out);

struct VerifyRequest {
  RunConfig run;
  std::string suite = "all";  // coeffs | reference | terminants | smoothing | all
};
int run_verify(const VerifyRequest& req, std::ostream& out);

}  // namespace hyperstokes::cli
