#include "hyperstokes/reference.hpp"

#include <utility>

#include "hyperstokes/coeffs.hpp"
#include "hyperstokes/errors.hpp"

namespace hyperstokes::reference {

namespace {

struct GValue {
  Complex value;
  Real est_abs_error;
};

// Whole turns to remove so the remaining angle lies in (-pi, pi].
Integer turns_to_remove(const SurfacePoint& z) {
  if (z.pure_rational_angle()) {
    // smallest integer s with (m - 1)/2 <= s, m the pi-multiple
    Rational x = (z.pi_multiple() - 1) / 2;
    Integer s = numerator(x) / denominator(x);  // truncation toward zero
    while (Rational(s) < x) ++s;
    return s;
  }
  Real x = (z.angle() / pi() - 1) / 2;
  return Integer(ceil(x).convert_to<long long>());
}

// The exact rational coefficients carry very large integer components, so
// converting them to Real once per working precision (instead of once per
// series term per evaluation) matters in the hot loops below.
const Real& log_gamma_coeff_real(unsigned n) {
  thread_local std::map<unsigned, std::vector<Real>> tables;
  std::vector<Real>& vals = tables[current_digits()];
  while (vals.size() <= n) {
    const unsigned k = static_cast<unsigned>(vals.size());
    vals.push_back(k == 0 ? Real(0) : to_real(coeffs::log_gamma_coeff(k)));
  }
  return vals[n];
}

const Real& series_coeff_real(bool reciprocal, unsigned n) {
  thread_local std::map<unsigned, std::vector<Real>> plain_tables;
  thread_local std::map<unsigned, std::vector<Real>> recip_tables;
  std::vector<Real>& vals = (reciprocal ? recip_tables : plain_tables)[current_digits()];
  while (vals.size() <= n) {
    const unsigned k = static_cast<unsigned>(vals.size());
    vals.push_back(
        to_real(reciprocal ? coeffs::stirling_gamma(k) : coeffs::gamma_star_coeff(k)));
  }
  return vals[n];
}

// Asymptotic series sum_{n>=1} a_n Z^{1-2n} at a point far inside the right
// half plane; first omitted term returned as the error bound.
GValue g_series(const Complex& Z, unsigned target_digits) {
  const Real tol = pow(Real(10), -static_cast<int>(target_digits) - 4);
  Complex zinv = Real(1) / Z;
  Complex zinv2 = zinv * zinv;
  Complex power = zinv;  // Z^{1-2n} for n = 1
  Complex sum;
  Real bound;
  for (unsigned n = 1; n < 100000; ++n) {
    Complex term = power * log_gamma_coeff_real(n);
    Real mag = abs(term);
    if (mag < tol) {
      return {sum, mag};
    }
    if (!bound.is_zero() && mag > bound) {
      throw ConvergenceError("g series started diverging before reaching tolerance");
    }
    bound = mag;
    sum += term;
    power *= zinv2;
  }
  throw ConvergenceError("g series failed to terminate");
}

// log with the branch continuous on the half-plane containing the descent
// path; v always has |arg| <= pi here and atan2 resolves the negative axis
// through the tiny imaginary part the polar construction leaves behind.
Complex log_descent(const Complex& v) { return log(v); }

GValue g_principal(const SurfacePoint& z, unsigned target_digits) {
  const Complex v = z.value();
  // shift until the series point is deep enough in the right half plane
  const Real r_min = Real(static_cast<int>(target_digits) + 8) / (two_pi() * log10_e());
  unsigned shift = 0;
  Complex Z = v;
  while (abs(Z) < r_min || Z.re < Real(7) / 10 * abs(Z)) {
    ++shift;
    Z.re += 1;
    if (shift > 100000) throw ConvergenceError("g shift failed to reach series domain");
  }
  GValue tail = g_series(Z, target_digits);
  Complex descent;
  for (unsigned j = 0; j < shift; ++j) {
    Complex zj = v + Real(static_cast<long>(j));
    Complex zj1 = v + Real(static_cast<long>(j) + 1);
    descent += (zj + Real(1) / 2) * (log_descent(zj1) - log_descent(zj)) - Real(1);
  }
  Real rounding = Real(shift + 10) * pow(Real(10), -static_cast<int>(current_digits()) + 1);
  return {tail.value + descent, tail.est_abs_error + rounding};
}

GValue g_impl(const SurfacePoint& z, unsigned target_digits) {
  if (z.on_negative_axis()) {
    Real m = z.modulus();
    if (floor(m) == m) {
      throw PoleError("gamma* pole at " + z.describe());
    }
  }
  int cmp_hi = z.compare_angle(Rational(1));
  int cmp_lo = z.compare_angle(Rational(-1));
  if (cmp_hi <= 0 && cmp_lo > 0) {
    return g_principal(z, target_digits);
  }
  // remove whole turns; each turn adds -2*pi*i*v + pi*i - 2*pi*i*(floor(r)+1)
  Integer s = turns_to_remove(z);
  SurfacePoint z0 = z.rotated(Rational(-2 * s));
  GValue base = g_principal(z0, target_digits);
  Complex v = z0.value();
  Real k = floor(z.modulus()) + 1;
  Complex delta = mul_minus_i(two_pi() * v) + Complex(Real(0), pi()) -
                  Complex(Real(0), two_pi() * k);
  Real s_real(s.str());
  return {base.value + delta * s_real, base.est_abs_error + abs(s_real) * eps_for(target_digits)};
}

GValue g_guarded(const SurfacePoint& z) {
  unsigned digits = current_digits();
  GValue out;
  {
    PrecisionScope guard(digits + 15);
    out = g_impl(z, digits + 10);
  }
  return {to_current(out.value), to_current(out.est_abs_error)};
}

Complex horner_partial(const SurfacePoint& z, unsigned n_terms, bool reciprocal) {
  // integer powers of z are single-valued: plain complex Horner evaluation
  Complex u = Real(1) / z.value();
  Complex acc;
  for (unsigned n = n_terms; n-- > 0;) {
    acc = acc * u + Complex(series_coeff_real(reciprocal, n));
  }
  return acc;
}

RemainderReport remainder_impl(const SurfacePoint& z, unsigned n_terms, bool reciprocal) {
  unsigned digits = current_digits();
  Complex oracle_v, partial_v, rem;
  Real est;
  {
    PrecisionScope guard(digits + 20);
    GValue gv = g_guarded(z);
    oracle_v = reciprocal ? exp(-gv.value) : exp(gv.value);
    partial_v = horner_partial(z, n_terms, reciprocal);
    rem = oracle_v - partial_v;
    est = gv.est_abs_error * abs(oracle_v);
  }
  RemainderReport rep;
  rep.oracle = to_current(oracle_v);
  rep.partial = to_current(partial_v);
  rep.remainder = to_current(rem);
  Real scale = abs(rep.oracle) > abs(rep.partial) ? abs(rep.oracle) : abs(rep.partial);
  Real rmag = abs(rep.remainder);
  if (rmag.is_zero()) {
    throw PrecisionError("level-0 remainder fully cancelled at current precision");
  }
  Real lost = log10(scale / rmag);
  rep.digits_lost = lost < 0 ? 0u : static_cast<unsigned>(lost);
  if (rep.digits_lost + 10 > digits) {
    throw PrecisionError("level-0 remainder extraction left fewer than 10 digits: lost " +
                         std::to_string(rep.digits_lost) + " of " + std::to_string(digits));
  }
  rep.est_rel_error = to_current((est + eps_for(digits) * scale) / rmag);
  return rep;
}

}  // namespace

Complex g(const SurfacePoint& z) { return g_guarded(z).value; }

GammaStarValue gamma_star(const SurfacePoint& z) {
  GValue gv = g_guarded(z);
  Complex value = exp(gv.value);
  Real est = gv.est_abs_error + 5 * eps_for(current_digits());
  return {value, est};
}

GammaStarValue reciprocal_gamma_star(const SurfacePoint& z) {
  GValue gv = g_guarded(z);
  Complex value = exp(-gv.value);
  Real est = gv.est_abs_error + 5 * eps_for(current_digits());
  return {value, est};
}

Complex partial_sum(const SurfacePoint& z, unsigned n_terms) {
  return horner_partial(z, n_terms, false);
}

Complex partial_sum_reciprocal(const SurfacePoint& z, unsigned n_terms) {
  return horner_partial(z, n_terms, true);
}

RemainderReport remainder_level0(const SurfacePoint& z, unsigned n_terms) {
  return remainder_impl(z, n_terms, false);
}

RemainderReport remainder_level0_reciprocal(const SurfacePoint& z, unsigned n_terms) {
  return remainder_impl(z, n_terms, true);
}

}  // namespace hyperstokes::reference
