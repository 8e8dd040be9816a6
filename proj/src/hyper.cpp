#include "hyperstokes/hyper.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hyperstokes/coeffs.hpp"
#include "hyperstokes/errors.hpp"
#include "hyperstokes/quadrature.hpp"
#include "hyperstokes/terminants.hpp"

namespace hyperstokes::hyper {

namespace {

SurfacePoint singulant(int direction_sign, unsigned scale) {
  return SurfacePoint(Real(static_cast<long>(scale)) * two_pi(),
                      Rational(direction_sign, 2));
}

Complex f1_term(const SurfacePoint& z, unsigned order, int direction_sign, unsigned scale) {
  return terminants::F1(z, Complex(Real(static_cast<long>(order))), singulant(direction_sign, scale));
}

Complex inverse_power(const SurfacePoint& z, unsigned n) {
  return Complex(Real(1)) / z.power(Real(static_cast<long>(n)));
}

// 1 / (2 pi i z^{N-1})
Complex level1_prefactor(const SurfacePoint& z, unsigned big_n) {
  return mul_minus_i(inverse_power(z, big_n - 1)) / two_pi();
}

struct RemainderParts {
  Complex oracle;
  Complex expansion;  // everything subtracted from the oracle
  Real oracle_abs_err;
};

reference::RemainderReport assemble_report(const RemainderParts& parts, unsigned caller_digits) {
  reference::RemainderReport rep;
  rep.oracle = to_current(parts.oracle);
  rep.partial = to_current(parts.expansion);
  rep.remainder = to_current(parts.oracle - parts.expansion);
  Real scale = abs(rep.oracle) > abs(rep.partial) ? abs(rep.oracle) : abs(rep.partial);
  Real rmag = abs(rep.remainder);
  if (rmag.is_zero()) {
    throw PrecisionError("hyperasymptotic remainder fully cancelled at current precision");
  }
  Real lost = log10(scale / rmag);
  rep.digits_lost = lost < 0 ? 0u : static_cast<unsigned>(lost);
  if (rep.digits_lost + 10 > caller_digits) {
    throw PrecisionError("hyperasymptotic remainder extraction left fewer than 10 digits: lost " +
                         std::to_string(rep.digits_lost) + " of " +
                         std::to_string(caller_digits));
  }
  rep.est_rel_error = to_current((parts.oracle_abs_err + eps_for(caller_digits) * scale) / rmag);
  return rep;
}

RemainderParts remainder_parts(const SurfacePoint& z, unsigned big_n, unsigned big_m,
                               unsigned big_k, bool reciprocal, bool with_level2) {
  RemainderParts parts;
  reference::GammaStarValue oracle =
      reciprocal ? reference::reciprocal_gamma_star(z) : reference::gamma_star(z);
  parts.oracle = oracle.value;
  parts.oracle_abs_err = oracle.est_rel_error * abs(oracle.value);
  Complex expansion = reciprocal ? reference::partial_sum_reciprocal(z, big_n)
                                 : reference::partial_sum(z, big_n);
  LevelPair lv1 = level1_terms(z, big_n, big_m);
  expansion += reciprocal ? lv1.reciprocal : lv1.plain;
  if (with_level2) {
    LevelPair lv2 = level2_terms(z, big_n, big_m, big_k);
    expansion += reciprocal ? lv2.reciprocal : lv2.plain;
  }
  parts.expansion = expansion;
  return parts;
}

reference::RemainderReport remainder_report(const SurfacePoint& z, unsigned big_n, unsigned big_m,
                                            unsigned big_k, bool reciprocal, bool with_level2) {
  const unsigned caller_digits = current_digits();
  RemainderParts parts;
  {
    PrecisionScope guard(caller_digits + 20);
    parts = remainder_parts(z, big_n, big_m, big_k, reciprocal, with_level2);
  }
  return assemble_report(parts, caller_digits);
}

}  // namespace

TruncationScheme optimal_scheme(const Real& absz, unsigned level) {
  if (level > 2) throw ConfigError("re-expansion depth beyond 2 is not provided");
  if (!(absz > 0)) throw DomainError("optimal_scheme requires a positive modulus");
  TruncationScheme s;
  s.level = level;
  auto at = [&](unsigned span) {
    Real v = floor(two_pi() * absz * static_cast<long>(span));
    if (v < 1) v = Real(1);
    return static_cast<unsigned>(v.convert_to<long>());
  };
  s.big_n = at(level + 1);
  if (level >= 1) s.big_m = at(level);
  if (level >= 2) s.big_k = at(level - 1);
  return s;
}

unsigned scheduled_digits(const Real& absz, unsigned level) {
  if (!(absz > 0)) throw DomainError("scheduled_digits requires a positive modulus");
  // Each stage cancels about 2 pi |z| log10(e) digits; the extra 0.35 stage
  // covers over-truncated leading sums whose largest terms exceed the oracle.
  Real cancel = two_pi() * absz * (Real(static_cast<long>(level + 1)) + Real(35) / 100) * log10_e();
  unsigned d = 24 + static_cast<unsigned>(ceil(cancel).convert_to<long>()) + 12;
  return d < kDefaultDigits ? kDefaultDigits : d;
}

LevelPair level1_terms(const SurfacePoint& z, unsigned big_n, unsigned big_m) {
  if (big_m >= big_n) throw ConfigError("level1_terms requires M < N");
  const unsigned target = current_digits();
  LevelPair out;
  if (big_m == 0) return out;
  {
    PrecisionScope guard(target + 10);
    Complex sum_plain, sum_recip;
    for (unsigned m = 0; m < big_m; ++m) {
      Complex d = f1_term(z, big_n - m, +1, 1) - f1_term(z, big_n - m, -1, 1);
      Real c = to_real(coeffs::gamma_star_coeff(m));   // (-1)^m gamma_m
      Real gamma_m = to_real(coeffs::stirling_gamma(m));
      sum_plain += c * d;
      sum_recip -= gamma_m * d;
    }
    Complex pref = level1_prefactor(z, big_n);
    out.plain = pref * sum_plain;
    out.reciprocal = pref * sum_recip;
  }
  out.plain = to_current(out.plain);
  out.reciprocal = to_current(out.reciprocal);
  return out;
}

LevelPair level2_terms(const SurfacePoint& z, unsigned big_n, unsigned big_m, unsigned big_k) {
  if (!(big_k < big_m && big_m < big_n)) throw ConfigError("level2_terms requires K < M < N");
  const unsigned target = current_digits();
  LevelPair out;
  if (big_k == 0) return out;
  {
    PrecisionScope guard(target + 10);
    const Complex order_a(Real(static_cast<long>(big_n - big_m + 1)));
    Complex sum_plain, sum_recip, sum_plain_f1, sum_recip_f1;
    terminants::QuadOptions opts;
    for (unsigned k = 0; k < big_k; ++k) {
      const Complex order_b(Real(static_cast<long>(big_m - k)));
      // Substituting the level-1 representation of the inner remainder into
      // the level-1 contour integral pairs each outer ray with the two inner
      // directions at opposite signs, so the mixed-direction second-order
      // terminants enter negatively. The lower outer ray additionally sits on
      // the other side of the coincident inner ray than the staggered
      // definition uses; moving it across picks up the contour's residue
      // density, a first-level terminant at the doubled singulant. For the
      // plain series this happens on the lower ray directly; for the
      // reciprocal series the same pickup appears (and survives) on the upper
      // ray through the sheet connection of the rotated argument.
      Complex four;
      for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
          terminants::TerminantSpec spec{{order_a, singulant(s1, 1)}, {order_b, singulant(s2, 1)}};
          Complex term = terminants::Fm_quadrature(z, spec, opts).value;
          if (s1 == s2) {
            four += term;
          } else {
            four -= term;
          }
        }
      }
      Real c = to_real(coeffs::gamma_star_coeff(k));
      Real gamma_k = to_real(coeffs::stirling_gamma(k));
      sum_plain += c * four;
      sum_recip += gamma_k * four;
      sum_plain_f1 -= c * f1_term(z, big_n - k, -1, 2);
      sum_recip_f1 -= gamma_k * f1_term(z, big_n - k, +1, 2);
    }
    Complex pref1 = level1_prefactor(z, big_n);
    Complex pref2 = mul_minus_i(pref1) / two_pi();
    out.plain = pref2 * sum_plain + pref1 * sum_plain_f1;
    out.reciprocal = pref2 * sum_recip + pref1 * sum_recip_f1;
  }
  out.plain = to_current(out.plain);
  out.reciprocal = to_current(out.reciprocal);
  return out;
}

reference::RemainderReport remainder_level1(const SurfacePoint& z, unsigned big_n,
                                            unsigned big_m) {
  return remainder_report(z, big_n, big_m, 0, false, false);
}

reference::RemainderReport remainder_level1_reciprocal(const SurfacePoint& z, unsigned big_n,
                                                       unsigned big_m) {
  return remainder_report(z, big_n, big_m, 0, true, false);
}

reference::RemainderReport remainder_level2(const SurfacePoint& z, unsigned big_n, unsigned big_m,
                                            unsigned big_k) {
  return remainder_report(z, big_n, big_m, big_k, false, true);
}

reference::RemainderReport remainder_level2_reciprocal(const SurfacePoint& z, unsigned big_n,
                                                       unsigned big_m, unsigned big_k) {
  return remainder_report(z, big_n, big_m, big_k, true, true);
}

Complex remainder_level1_quadrature(const SurfacePoint& z, unsigned big_n, unsigned big_m,
                                    bool reciprocal, const Real& rel_tol) {
  if (big_m >= big_n) throw ConfigError("level-1 remainder requires M < N");
  const unsigned target = current_digits();
  Complex result;
  {
    PrecisionScope guard(target + 15);
    const Real clearance = Real(1) / 10;
    if (!(abs(z.angle()) < pi() / 2 - clearance)) {
      throw DomainError(
          "contour form of the level-1 remainder needs |arg z| < pi/2 - 1/10; got " +
          dec_string(z.angle(), 20));
    }
    // Contours pulled off the imaginary axis by delta, staying on the pole's
    // far side (the [pi/2-] / [-pi/2+] prescriptions).
    const Real delta = Real(1) / 25;
    const Real big_n_r(static_cast<long>(big_n));
    Complex total;
    for (int upper : {+1, -1}) {
      Real eta = upper > 0 ? pi() / 2 - delta : -pi() / 2 + delta;
      Complex dir = from_polar(Real(1), eta);
      Complex sig = Complex(Real(0), Real(2 * upper)) * pi();  // +-2 pi i
      auto integrand = [&](const Real& s) {
        SurfacePoint t(s, 0, eta);
        // The reciprocal-series remainder integral samples the plain
        // level-0 remainder on the opposite sheet, t e^{-+ pi i}.
        SurfacePoint t_arg = reciprocal ? t.rotated(Rational(-upper)) : t;
        Complex r_m =
            reference::gamma_star(t_arg).value - reference::partial_sum(t_arg, big_m);
        Complex tv = t.value();
        return exp(sig * tv) * t.power(big_n_r - 1) / (Complex(Real(1)) - tv / z.value()) * r_m *
               dir;
      };
      // Envelope e^{-2 pi s sin(pi/2 - delta)} s^{N-1-M}; peak of the
      // integrand sits near s = (N-1) / (2 pi).
      Real speak = (big_n_r - 1) / two_pi();
      quadrature::HalflineEnvelope env{two_pi() * cos(delta), big_n_r - 1};
      quadrature::QuadResult q = quadrature::integrate_halfline(
          integrand, env, rel_tol,
          {speak / 4, speak / 2, speak, 2 * speak});
      Complex piece = mul_minus_i(q.value) / (two_pi() * z.power(big_n_r));
      total += Real(upper) * piece;
    }
    // The reciprocal variant's contour form carries an overall minus sign.
    result = reciprocal ? -total : total;
  }
  return to_current(result);
}

std::vector<Rational> pi_multiple_grid(const Rational& lo, const Rational& hi,
                                       const Rational& step) {
  if (!(step > 0)) throw ConfigError("grid step must be positive");
  std::vector<Rational> grid;
  for (Rational cur = lo; cur <= hi; cur += step) grid.push_back(cur);
  return grid;
}

std::vector<MultiplierSample> stokes_multiplier_curve(const Real& absz, MultiplierKind kind,
                                                      const std::vector<Rational>& theta_pi_grid) {
  TruncationScheme scheme = optimal_scheme(absz, 1);
  std::vector<MultiplierSample> samples;
  samples.reserve(theta_pi_grid.size());
  const bool reciprocal = kind == MultiplierKind::kReciprocal;
  for (const Rational& theta_pi : theta_pi_grid) {
    unsigned digits = scheduled_digits(absz, 1);
    for (int attempt = 0;; ++attempt) {
      try {
        PrecisionScope guard(digits);
        SurfacePoint z(absz, theta_pi);
        reference::RemainderReport rep =
            reciprocal ? remainder_level1_reciprocal(z, scheme.big_n, scheme.big_m)
                       : remainder_level1(z, scheme.big_n, scheme.big_m);
        // e^{-4 pi i z}
        Complex sw = exp(mul_minus_i(z.value()) * (2 * two_pi()));
        MultiplierSample sample;
        sample.theta_pi = theta_pi;
        sample.s = reciprocal ? -(rep.remainder * sw) : rep.remainder * sw;
        sample.kind = kind;
        sample.big_n = scheme.big_n;
        sample.big_m = scheme.big_m;
        sample.digits_used = digits;
        samples.push_back(std::move(sample));
        break;
      } catch (const PrecisionError&) {
        if (attempt >= 2) throw;
        digits += 20 + digits / 4;
      }
    }
  }
  return samples;
}

DiscontinuousPair discontinuous_multipliers(unsigned k, const Rational& theta_pi_multiple) {
  if (k == 0) throw ConfigError("multiplier index must be at least 1");
  Rational a = theta_pi_multiple < 0 ? Rational(-theta_pi_multiple) : theta_pi_multiple;
  if (a >= 1) {
    throw DomainError("piecewise multipliers are defined for |theta| < pi");
  }
  // (1/2)_k / k! and (-1/2)_k / k!.
  Rational poch_half(1), poch_neg_half(1);
  for (unsigned j = 0; j < k; ++j) {
    poch_half *= Rational(1 + 2 * static_cast<long>(j), 2);
    poch_neg_half *= Rational(-1 + 2 * static_cast<long>(j), 2);
    Rational den(static_cast<long>(j + 1));
    poch_half /= den;
    poch_neg_half /= den;
  }
  DiscontinuousPair out;
  Rational half(1, 2);
  if (a < half) {
    out.s = 0;
    out.s_tilde = 0;
  } else if (a == half) {
    out.s = poch_half;
    Rational neg = -poch_neg_half;
    out.s_tilde = k == 1 ? poch_half : neg;
  } else {
    out.s = 1;
    out.s_tilde = k == 1 ? Rational(1) : Rational(0);
  }
  return out;
}

}  // namespace hyperstokes::hyper
