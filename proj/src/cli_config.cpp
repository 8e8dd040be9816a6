#include "hyperstokes/cli_config.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperstokes/coeffs.hpp"
#include "hyperstokes/complex.hpp"
#include "hyperstokes/errors.hpp"
#include "hyperstokes/hyper.hpp"
#include "hyperstokes/reference.hpp"
#include "hyperstokes/smoothing.hpp"
#include "hyperstokes/surface.hpp"
#include "hyperstokes/terminants.hpp"

namespace hyperstokes::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

Real parse_real(const std::string& s, const std::string& flag) {
  try {
    return Real(trimmed(s));
  } catch (const std::exception&) {
    throw ConfigError(flag + ": not a decimal number: '" + s + "'");
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trimmed(item));
  return out;
}

json complex_json(const Complex& v) {
  return json{{"re", dec_string(v.re)}, {"im", dec_string(v.im)}};
}

json rational_json(const Rational& q) { return json(q.str()); }

// Prints pass/fail lines for the verify subcommand and remembers failures.
struct CheckReporter {
  std::ostream& out;
  bool all_ok = true;

  void check(const std::string& name, bool pass, const std::string& detail) {
    out << (pass ? "[ ok ] " : "[FAIL] ") << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
    if (!pass) all_ok = false;
  }

  void residual(const std::string& name, const Real& value, const Real& bound) {
    check(name, value <= bound,
          "residual " + dec_string(value, 3) + ", bound " + dec_string(bound, 3));
  }
};

void verify_coeffs(CheckReporter& rep) {
  rep.check("series_coefficient_literals",
            coeffs::stirling_gamma(0) == Rational(1) &&
                coeffs::stirling_gamma(1) == Rational(-1, 12) &&
                coeffs::stirling_gamma(2) == Rational(1, 288) &&
                coeffs::stirling_gamma(3) == Rational(139, 51840),
            "gamma_0..gamma_3 = 1, -1/12, 1/288, 139/51840");
  rep.check("log_series_coefficient_literals",
            coeffs::log_gamma_coeff(1) == Rational(1, 12) &&
                coeffs::log_gamma_coeff(2) == Rational(-1, 360) &&
                coeffs::log_gamma_coeff(3) == Rational(1, 1260),
            "a_1..a_3 = 1/12, -1/360, 1/1260");
  bool conv_ok = true;
  for (unsigned n = 0; n <= 40 && conv_ok; ++n) {
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k) {
      Rational term = coeffs::gamma_star_coeff(k) * coeffs::stirling_gamma(n - k);
      acc += term;
    }
    Rational expect = n == 0 ? Rational(1) : Rational(0);
    conv_ok = acc == expect;
  }
  rep.check("series_reciprocal_convolution_exact", conv_ok,
            "sum_k (-1)^k gamma_k gamma_{n-k} = [n == 0] for n <= 40");
  bool sign_ok = true;
  for (unsigned n = 1; n <= 40 && sign_ok; ++n) {
    int expected = (n % 2 == 1) ? 1 : -1;
    const Rational& b = coeffs::bernoulli(2 * n);
    int actual = b > 0 ? 1 : (b < 0 ? -1 : 0);
    sign_ok = actual == expected;
  }
  rep.check("even_bernoulli_sign_alternation", sign_ok, "sign B_{2n} = (-1)^{n+1}, n <= 40");
}

void verify_reference(CheckReporter& rep) {
  const unsigned d = current_digits();
  {
    SurfacePoint one(Real(1), Rational(0));
    reference::GammaStarValue v = reference::gamma_star(one);
    Complex expect(exp(Real(1)) / sqrt(two_pi()));
    rep.residual("scaled_gamma_at_one", abs(v.value - expect) / abs(expect), eps_for(d - 10));
  }
  {
    // g(z) + g(z e^{-i pi}) + log(1 - e^{2 pi i z}) = 0 in the upper half.
    SurfacePoint z(Real(5), Rational(4, 5));
    Complex res = reference::g(z) + reference::g(z.rotated(Rational(-1))) +
                  log(Complex(Real(1)) - exp(mul_i(z.value()) * two_pi()));
    rep.residual("reflection_continuation_upper", abs(res), eps_for(d - 10));
  }
  {
    SurfacePoint z(Real(5), Rational(-4, 5));
    Complex res = reference::g(z) + reference::g(z.rotated(Rational(1))) +
                  log(Complex(Real(1)) - exp(mul_minus_i(z.value()) * two_pi()));
    rep.residual("reflection_continuation_lower", abs(res), eps_for(d - 10));
  }
  {
    // Gamma*(z e^{2 pi i}) = -e^{-2 pi i z} Gamma*(z).
    SurfacePoint z(Real(21) / 4, Rational(3, 10));
    reference::GammaStarValue lhs = reference::gamma_star(z.rotated(Rational(2)));
    reference::GammaStarValue rhs = reference::gamma_star(z);
    Complex want = -(exp(mul_minus_i(z.value()) * two_pi()) * rhs.value);
    Real bound = 100 * (lhs.est_rel_error + rhs.est_rel_error) + eps_for(d - 10);
    rep.residual("winding_once_identity", abs(lhs.value - want) / abs(lhs.value), bound);
  }
}

void verify_terminants(CheckReporter& rep, const Real& tol) {
  const unsigned d = current_digits();
  Real loose = 200 * tol + eps_for(d - 15);
  {
    SurfacePoint z(Real(5) / 2, Rational(3, 10));
    SurfacePoint sig(two_pi(), Rational(1, 2));
    Complex order(Real(7) / 2);
    Complex closed = terminants::F1(z, order, sig);
    Complex ray = terminants::F1_ray_quadrature(z, order, sig, tol);
    rep.residual("first_terminant_closed_vs_ray", abs(closed - ray) / abs(closed), loose);
  }
  {
    SurfacePoint z(Real(3), Rational(1, 5));
    SurfacePoint sig(two_pi(), Rational(1, 2));
    Complex order(Real(4));
    terminants::TerminantSpec spec{{order, sig}, {order, sig}};
    Complex quad = terminants::Fm_quadrature(z, spec).value;
    Complex bell = terminants::F_bell(z, order, sig, 2);
    rep.residual("second_terminant_contour_vs_exponential", abs(quad - bell) / abs(bell),
                 Real("1e-8"));
  }
  {
    SurfacePoint z(Real(5) / 2, Rational(-1, 4));
    SurfacePoint sig(two_pi(), Rational(1, 2));
    terminants::TerminantSpec spec{{Complex(Real(5)), sig}, {Complex(Real(3)), sig}};
    Complex res = terminants::connection_residual(z, spec);
    rep.residual("sheet_connection_identity", abs(res), loose);
  }
  {
    SurfacePoint z(Real(2), Rational(1, 7));
    SurfacePoint sig(two_pi(), Rational(1, 2));
    Complex res = terminants::recurrence_shift_residual(z, Complex(Real(4)), sig, 2, 2, tol);
    rep.residual("order_shift_recurrence", abs(res), loose);
  }
}

void verify_smoothing(CheckReporter& rep) {
  const unsigned d = current_digits();
  bool direct_ok = true;
  bool conj_ok = true;
  Rational poch_dir(1);
  Rational poch_con(1);
  for (unsigned m = 1; m <= 5; ++m) {
    poch_dir *= Rational(2 * static_cast<long>(m) - 1, 2 * static_cast<long>(m));
    poch_con *= Rational(2 * static_cast<long>(m) - 3, 2 * static_cast<long>(m));
    direct_ok = direct_ok &&
                smoothing::stokes_line_coefficient_sum(m, smoothing::ApproxVariant::kDirect) ==
                    poch_dir;
    conj_ok = conj_ok &&
              smoothing::stokes_line_coefficient_sum(m, smoothing::ApproxVariant::kConjugate) ==
                  poch_con;
  }
  rep.check("stokes_line_partition_sums_direct", direct_ok, "(1/2)_m / m! for m <= 5");
  rep.check("stokes_line_partition_sums_conjugate", conj_ok, "(-1/2)_m / m! for m <= 5");

  bool resid_ok = true;
  Real worst(0);
  for (int num : {-12, -5, 6, 11, 16, 19, 20}) {
    Real phi = Real(num) / 20 * pi();
    Complex c = smoothing::c_of_phi(phi);
    Complex h(Real(0), phi - pi());
    Complex res = c * c / Real(2) - (Complex(Real(1)) + h - exp(h));
    Real mag = abs(res);
    if (mag > worst) worst = mag;
    if (num < 20 && !(c.re > 0)) resid_ok = false;
  }
  rep.check("transition_scale_defining_equation", resid_ok && worst <= eps_for(d - 8),
            "max residual " + dec_string(worst, 3) + "; Re c > 0 below the line");
}

}  // namespace

unsigned resolve_digits(unsigned flag_value) {
  unsigned digits = flag_value;
  if (digits == 0) {
    if (const char* env = std::getenv("HYPERSTOKES_DIGITS")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end == env || *end != '\0' || v == 0 || v > 1000000) {
        throw ConfigError("HYPERSTOKES_DIGITS must be a positive integer, got '" +
                          std::string(env) + "'");
      }
      digits = static_cast<unsigned>(v);
    } else {
      digits = kDefaultDigits;
    }
  }
  if (digits < kMinDigits) {
    throw ConfigError("digits must be at least 30, got " + std::to_string(digits));
  }
  return digits;
}

Real parse_tolerance(const std::string& s) {
  if (s.empty()) return Real("1e-12");
  Real tol = parse_real(s, "--tolerance");
  if (!(tol > 0) || tol > Real("1e-4")) {
    throw ConfigError("tolerance must lie in (0, 1e-4], got " + s);
  }
  return tol;
}

Rational parse_pi_units(const std::string& raw) {
  const std::string s = trimmed(raw);
  auto fail = [&]() -> Rational {
    throw ConfigError("angle must be a decimal or fraction in units of pi, got '" + raw + "'");
  };
  if (s.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  auto digits_from = [&](std::size_t& p) {
    std::string d;
    while (p < s.size() && s[p] >= '0' && s[p] <= '9') d.push_back(s[p++]);
    return d;
  };
  std::string whole = digits_from(pos);
  Rational value;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::string den = digits_from(pos);
    if (whole.empty() || den.empty() || pos != s.size()) return fail();
    Integer d(den);
    if (d == 0) return fail();
    value = Rational(Integer(whole), d);
  } else if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::string frac = digits_from(pos);
    if ((whole.empty() && frac.empty()) || pos != s.size()) return fail();
    Integer scale(1);
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = Integer(whole.empty() ? "0" : whole) * scale +
                  Integer(frac.empty() ? "0" : frac);
    value = Rational(num, scale);
  } else {
    if (whole.empty() || pos != s.size()) return fail();
    value = Rational(Integer(whole));
  }
  if (negative) {
    Rational neg = -value;
    value = neg;
  }
  return value;
}

int run_eval(const EvalRequest& req, std::ostream& out) {
  const unsigned digits = resolve_digits(req.run.digits);
  PrecisionScope scope(digits);
  parse_tolerance(req.run.tolerance);  // validated even though eval has no quadrature
  Real absz = parse_real(req.z_mod, "--z-mod");
  if (!(absz > 0)) throw ConfigError("--z-mod must be positive");
  Rational arg_pi = parse_pi_units(req.z_arg_pi);
  if (req.level > 2) throw ConfigError("--level must be 0, 1 or 2");
  SurfacePoint z(absz, arg_pi);

  hyper::TruncationScheme scheme = hyper::optimal_scheme(absz, req.level);
  auto pick = [](long flag, unsigned scheduled) {
    if (flag < 0) return scheduled;
    if (flag == 0) throw ConfigError("truncation indices must be positive");
    return static_cast<unsigned>(flag);
  };
  unsigned big_n = pick(req.big_n, scheme.big_n);
  unsigned big_m = req.level >= 1 ? pick(req.big_m, scheme.big_m) : 0;
  unsigned big_k = req.level >= 2 ? pick(req.big_k, scheme.big_k) : 0;

  reference::RemainderReport report;
  if (req.level == 0) {
    report = req.reciprocal ? reference::remainder_level0_reciprocal(z, big_n)
                            : reference::remainder_level0(z, big_n);
  } else if (req.level == 1) {
    report = req.reciprocal ? hyper::remainder_level1_reciprocal(z, big_n, big_m)
                            : hyper::remainder_level1(z, big_n, big_m);
  } else {
    report = req.reciprocal ? hyper::remainder_level2_reciprocal(z, big_n, big_m, big_k)
                            : hyper::remainder_level2(z, big_n, big_m, big_k);
  }

  json j;
  j["command"] = "eval";
  j["series"] = req.reciprocal ? "reciprocal" : "plain";
  j["z_mod"] = dec_string(absz);
  j["z_arg_pi"] = rational_json(arg_pi);
  j["level"] = req.level;
  j["N"] = big_n;
  if (req.level >= 1) j["M"] = big_m;
  if (req.level >= 2) j["K"] = big_k;
  j["digits"] = digits;
  j["oracle"] = complex_json(report.oracle);
  j["partial_sum"] = complex_json(report.partial);
  j["remainder"] = complex_json(report.remainder);
  j["est_rel_error"] = dec_string(report.est_rel_error, 3);
  j["digits_lost"] = report.digits_lost;
  out << j.dump(2) << "\n";
  return 0;
}

int run_smooth(const SmoothRequest& req, std::ostream& out) {
  const unsigned digits = resolve_digits(req.run.digits);
  PrecisionScope scope(digits);
  parse_tolerance(req.run.tolerance);
  Real absz = parse_real(req.absz, "--absz");
  if (!(absz > 0)) throw ConfigError("--absz must be positive");

  hyper::MultiplierKind kind;
  Rational lo, hi;
  unsigned steps = req.steps;
  if (req.kind == "s2") {
    kind = hyper::MultiplierKind::kPlain;
    lo = Rational(3, 10);
    hi = Rational(3, 4);
    if (steps == 0) steps = 91;
  } else if (req.kind == "s2tilde") {
    kind = hyper::MultiplierKind::kReciprocal;
    lo = Rational(1, 20);
    hi = Rational(19, 20);
    if (steps == 0) steps = 181;
  } else {
    throw ConfigError("--kind must be s2 or s2tilde, got '" + req.kind + "'");
  }
  if (!req.theta_min_pi.empty()) lo = parse_pi_units(req.theta_min_pi);
  if (!req.theta_max_pi.empty()) hi = parse_pi_units(req.theta_max_pi);
  if (!(lo <= hi)) throw ConfigError("--theta-min must not exceed --theta-max");
  if (!(lo > Rational(-1) && hi < Rational(1))) {
    throw ConfigError("theta range must lie strictly inside (-pi, pi)");
  }
  if (steps < 1) throw ConfigError("--steps must be at least 1");
  if (steps == 1 && lo != hi) throw ConfigError("--steps 1 requires theta-min == theta-max");

  std::vector<Rational> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(lo);
  } else {
    Rational span = hi - lo;
    for (unsigned j = 0; j < steps; ++j) {
      grid.push_back(lo + span * Rational(static_cast<long>(j), static_cast<long>(steps - 1)));
    }
  }

  std::vector<hyper::MultiplierSample> samples = hyper::stokes_multiplier_curve(absz, kind, grid);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!req.out_path.empty()) {
    file.open(req.out_path);
    if (!file) throw ConfigError("cannot open output file '" + req.out_path + "'");
    sink = &file;
  }
  *sink << "theta_over_pi,re_S,im_S,N,M,digits_used\n";
  for (const auto& s : samples) {
    *sink << dec_string(to_real(s.theta_pi), 15) << ',' << dec_string(s.s.re) << ','
          << dec_string(s.s.im) << ',' << s.big_n << ',' << s.big_m << ',' << s.digits_used
          << "\n";
  }
  return 0;
}

int run_terminant(const TerminantRequest& req, std::ostream& out) {
  const unsigned digits = resolve_digits(req.run.digits);
  PrecisionScope scope(digits);
  Real tol = parse_tolerance(req.run.tolerance);
  std::vector<std::string> orders = split_list(req.orders);
  std::vector<std::string> args = split_list(req.singulant_args_pi);
  std::vector<std::string> mods = split_list(req.singulant_mods);
  if (orders.empty()) throw ConfigError("--orders requires at least one entry");
  if (args.size() != orders.size()) {
    throw ConfigError("--singulant-args must list one angle per order");
  }
  if (!mods.empty() && mods.size() != orders.size()) {
    throw ConfigError("--singulant-mods must list one modulus per order (or be omitted)");
  }
  Real absz = parse_real(req.z_mod, "--z-mod");
  if (!(absz > 0)) throw ConfigError("--z-mod must be positive");
  SurfacePoint z(absz, parse_pi_units(req.z_arg_pi));

  terminants::TerminantSpec spec;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    Real mod = mods.empty() ? two_pi() : parse_real(mods[i], "--singulant-mods");
    if (!(mod > 0)) throw ConfigError("singulant moduli must be positive");
    spec.push_back({Complex(parse_real(orders[i], "--orders")),
                    SurfacePoint(mod, parse_pi_units(args[i]))});
  }
  terminants::validate(spec);

  Complex value;
  Real err;
  if (req.method == "quad") {
    terminants::QuadOptions opts;
    opts.rel_tol = tol;
    terminants::FmResult res = terminants::Fm_quadrature(z, spec, opts);
    value = res.value;
    err = res.err_estimate;
  } else if (req.method == "bell") {
    for (std::size_t i = 1; i < spec.size(); ++i) {
      bool same = spec[i].order == spec[0].order &&
                  spec[i].singulant.modulus() == spec[0].singulant.modulus() &&
                  spec[i].singulant.pi_multiple() == spec[0].singulant.pi_multiple() &&
                  spec[i].singulant.offset() == spec[0].singulant.offset();
      if (!same) {
        throw ConfigError(
            "--method bell requires all levels to share one order and one singulant");
      }
    }
    value = terminants::F_bell(z, spec[0].order, spec[0].singulant,
                               static_cast<unsigned>(spec.size()));
    err = eps_for(digits - 8) * abs(value);
  } else {
    throw ConfigError("--method must be quad or bell, got '" + req.method + "'");
  }

  json j;
  j["command"] = "terminant";
  j["levels"] = spec.size();
  j["method"] = req.method;
  j["digits"] = digits;
  j["value_re"] = dec_string(value.re);
  j["value_im"] = dec_string(value.im);
  j["err_estimate"] = dec_string(err, 3);
  out << j.dump(2) << "\n";
  return 0;
}

int run_smoothing_breakdown(const SmoothingRequest& req, std::ostream& out) {
  const unsigned digits = resolve_digits(req.run.digits);
  PrecisionScope scope(digits);
  parse_tolerance(req.run.tolerance);
  if (req.m == 0) throw ConfigError("--m must be at least 1");
  Real absz = parse_real(req.absz, "--absz");
  if (!(absz > 0)) throw ConfigError("--absz must be positive");
  Rational phi_pi = parse_pi_units(req.phi_pi);
  smoothing::ApproxVariant variant;
  if (req.variant == "direct") {
    variant = smoothing::ApproxVariant::kDirect;
  } else if (req.variant == "conjugate") {
    variant = smoothing::ApproxVariant::kConjugate;
  } else {
    throw ConfigError("--variant must be direct or conjugate, got '" + req.variant + "'");
  }

  // Canonical frame: singulant 2 pi e^{i pi/2}, z placed so arg(sigma z) = phi,
  // first order N = |sigma z| = 2 pi |z| (the regime of the approximation).
  SurfacePoint sigma(two_pi(), Rational(1, 2));
  SurfacePoint z(absz, phi_pi - Rational(1, 2));
  Real big_n = two_pi() * absz;
  smoothing::ErfcPolyApprox approx = smoothing::erfc_poly_approx(z, sigma, big_n, req.m, variant);

  json j;
  j["command"] = "smoothing";
  j["phi_over_pi"] = rational_json(phi_pi);
  j["m"] = req.m;
  j["variant"] = req.variant;
  j["absz"] = dec_string(absz);
  j["rho"] = dec_string(approx.rho);
  j["digits"] = digits;
  json terms = json::array();
  for (const auto& t : approx.terms) {
    json jt;
    jt["multiplicity"] = t.multiplicity;
    jt["coefficient"] = rational_json(t.coefficient);
    jt["value"] = complex_json(t.value);
    terms.push_back(jt);
  }
  j["terms"] = terms;
  j["value"] = complex_json(approx.value);
  if (phi_pi == Rational(1)) {
    j["stokes_line_exact_sum"] =
        rational_json(smoothing::stokes_line_coefficient_sum(req.m, variant));
  }
  out << j.dump(2) << "\n";
  return 0;
}

int run_coeffs(const CoeffsRequest& req, std::ostream& out) {
  coeffs::DumpFormat fmt;
  if (req.format == "csv") {
    fmt = coeffs::DumpFormat::kCsv;
  } else if (req.format == "json") {
    fmt = coeffs::DumpFormat::kJson;
  } else {
    throw ConfigError("--format must be csv or json, got '" + req.format + "'");
  }
  coeffs::dump(out, req.max, fmt);
  return 0;
}

int run_verify(const VerifyRequest& req, std::ostream& out) {
  const unsigned digits = resolve_digits(req.run.digits);
  PrecisionScope scope(digits);
  Real tol = parse_tolerance(req.run.tolerance);
  CheckReporter rep{out};
  bool known = false;
  if (req.suite == "coeffs" || req.suite == "all") {
    verify_coeffs(rep);
    known = true;
  }
  if (req.suite == "reference" || req.suite == "all") {
    verify_reference(rep);
    known = true;
  }
  if (req.suite == "terminants" || req.suite == "all") {
    verify_terminants(rep, tol);
    known = true;
  }
  if (req.suite == "smoothing" || req.suite == "all") {
    verify_smoothing(rep);
    known = true;
  }
  if (!known) {
    throw ConfigError("--suite must be one of coeffs, reference, terminants, smoothing, all");
  }
  out << (rep.all_ok ? "verification passed" : "verification FAILED") << "\n";
  return rep.all_ok ? 0 : 1;
}

}  // namespace hyperstokes::cli
