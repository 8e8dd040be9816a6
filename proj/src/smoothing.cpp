#include "hyperstokes/smoothing.hpp"

#include <utility>
#include <vector>

#include "hyperstokes/errors.hpp"
#include "hyperstokes/incgamma.hpp"
#include "hyperstokes/reference.hpp"

namespace hyperstokes::smoothing {

namespace {

// Series for the transition branch near phi = pi (h = phi - pi):
// c = -h - i h^2/6 + h^3/36 + i h^4/270 + O(h^5).
Complex c_branch_series(const Real& h) {
  Real h2 = h * h;
  return Complex(-h + h2 * h / 36, -h2 / 6 + h2 * h2 / 270);
}

Complex c_defining_residual(const Complex& c, const Real& h) {
  Complex eih(cos(h), sin(h));
  return c * c / Real(2) - (Complex(Real(1), h) - eih);
}

// All multiplicity vectors (k_1, ..., k_m) with k_1 + 2 k_2 + ... + m k_m = m.
void collect_partitions(unsigned m, unsigned part, unsigned remaining,
                        std::vector<unsigned>& mult, std::vector<std::vector<unsigned>>& out) {
  if (part > m) {
    if (remaining == 0) out.push_back(mult);
    return;
  }
  for (unsigned k = 0; k * part <= remaining; ++k) {
    mult[part - 1] = k;
    collect_partitions(m, part + 1, remaining - k * part, mult, out);
  }
  mult[part - 1] = 0;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> mult(m, 0u);
  collect_partitions(m, 1, m, mult, out);
  return out;
}

// Signed rational prefactor of one partition: prod_j s^{k_j} / ((2j)^{k_j} k_j!),
// with s = -1 for the conjugate variant and s = +1 otherwise.
Rational partition_coefficient(const std::vector<unsigned>& mult, ApproxVariant variant) {
  Integer den = 1;
  unsigned total_parts = 0;
  for (unsigned j = 1; j <= mult.size(); ++j) {
    unsigned k = mult[j - 1];
    if (k == 0) continue;
    total_parts += k;
    Integer base = 2u * j;
    for (unsigned t = 0; t < k; ++t) den *= base;
    for (unsigned t = 2; t <= k; ++t) den *= t;
  }
  Rational coef(Integer(1), den);
  if (variant == ApproxVariant::kConjugate && total_parts % 2 == 1) {
    Rational neg = -coef;
    coef = neg;
  }
  return coef;
}

Complex complex_int_pow(const Complex& base, unsigned k) {
  Complex acc(Real(1));
  for (unsigned t = 0; t < k; ++t) acc *= base;
  return acc;
}

}  // namespace

Complex c_of_phi(const Real& phi) {
  const unsigned target = current_digits();
  Complex result;
  {
    PrecisionScope scope(target + 10);
    if (!(abs(phi) < 3 * pi())) {
      throw DomainError("c(phi) is only continued over -3*pi < phi < 3*pi, got phi = " +
                        dec_string(phi, 20));
    }
    Real h_target = to_current(phi) - pi();
    if (h_target.is_zero()) return Complex();
    // Continue the root from the series seed in steps of at most 1/25 rad,
    // polishing with Newton at each step.
    Real step_cap = Real(1) / 25;
    unsigned long steps = 1 + static_cast<unsigned long>((abs(h_target) / step_cap).convert_to<double>());
    const Real tol = eps_for(current_digits() - 4);
    Complex c;
    Real h_prev(0);
    for (unsigned long j = 1; j <= steps; ++j) {
      Real h = h_target * static_cast<long>(j) / static_cast<long>(steps);
      if (abs(h) < Real(1) / 8) {
        c = c_branch_series(h);
      } else {
        // Euler predictor along dc/dh = i (1 - e^{ih}) / c.
        Complex slope = mul_i(Complex(Real(1)) - Complex(cos(h_prev), sin(h_prev))) / c;
        c += slope * (h - h_prev);
      }
      Complex c_entry = c;
      bool converged = false;
      for (int it = 0; it < 80; ++it) {
        Complex f = c_defining_residual(c, h);
        Complex c_new = c - f / c;
        Real scale = abs(c);
        if (scale < 1) scale = Real(1);
        if (abs(c_new - c) < tol * scale) {
          c = c_new;
          converged = true;
          break;
        }
        c = c_new;
      }
      if (!converged) {
        throw ConvergenceError("c(phi) Newton polish stalled at phi = " + dec_string(phi, 20));
      }
      Real dh = abs(h - h_prev);
      if (j > 1 && abs(c - c_entry) > 10 * dh) {
        throw BranchError("c(phi) continuation jumped branches near phi = " +
                          dec_string(pi() + h, 20));
      }
      h_prev = h;
    }
    result = c;
  }
  return to_current(result);
}

ErfcPolyApprox erfc_poly_approx(const SurfacePoint& z, const SurfacePoint& sigma, const Real& big_n,
                                unsigned m, ApproxVariant variant) {
  if (m == 0) throw ConfigError("erfc_poly_approx requires m >= 1");
  const unsigned target = current_digits();
  ErfcPolyApprox out;
  out.m = m;
  out.variant = variant;
  {
    PrecisionScope scope(target + 10);
    SurfacePoint w = surface_mul(sigma, z);
    Real phi = w.angle();
    Real absw = w.modulus();
    Complex carg = variant == ApproxVariant::kDirect ? c_of_phi(phi) : conj(c_of_phi(-phi));
    // erfc(c sqrt(j |sigma z| / 2)) for each part size j.
    std::vector<Complex> erfc_by_part;
    erfc_by_part.reserve(m);
    for (unsigned j = 1; j <= m; ++j) {
      erfc_by_part.push_back(incgamma::erfc(carg * sqrt(Real(j) * absw / 2)));
    }
    Complex total;
    for (const auto& mult : partitions_of(m)) {
      PartitionTerm term;
      term.multiplicity = mult;
      term.coefficient = partition_coefficient(mult, variant);
      Complex prod(to_real(term.coefficient));
      for (unsigned j = 1; j <= m; ++j) {
        if (mult[j - 1] > 0) prod *= complex_int_pow(erfc_by_part[j - 1], mult[j - 1]);
      }
      term.value = prod;
      total += prod;
      out.terms.push_back(std::move(term));
    }
    out.phi = phi;
    out.rho = big_n - absw;
    out.value = total;
  }
  out.phi = to_current(out.phi);
  out.rho = to_current(out.rho);
  out.value = to_current(out.value);
  for (auto& term : out.terms) term.value = to_current(term.value);
  return out;
}

Rational stokes_line_coefficient_sum(unsigned m, ApproxVariant variant) {
  if (m == 0) throw ConfigError("stokes_line_coefficient_sum requires m >= 1");
  Rational total = 0;
  for (const auto& mult : partitions_of(m)) {
    total += partition_coefficient(mult, variant);
  }
  return total;
}

F1Asymptotic f1_asymptotic(const SurfacePoint& z, const SurfacePoint& sigma, const Real& big_n,
                           long /*order_shift: the leading-order forms do not depend on it*/,
                           ApproxVariant variant) {
  const unsigned target = current_digits();
  F1Asymptotic out;
  {
    PrecisionScope scope(target + 10);
    SurfacePoint w = surface_mul(sigma, z);
    Real phi = w.angle();
    Real absw = w.modulus();
    const Real delta = Real(3) / 10;
    if (abs(phi) <= pi() - delta) {
      // Saddle-point sector: -i e^{(pi-phi) i N} / (1 + e^{-i phi})
      //                      * e^{-sigma z - |sigma z|} / sqrt(2 pi |sigma z|).
      Complex phase = exp(Complex(Real(0), (pi() - phi) * big_n));
      Complex denom = Complex(Real(1)) + exp(Complex(Real(0), -phi));
      Complex amp = exp(-(w.value()) - absw) / sqrt(two_pi() * absw);
      Complex v = mul_minus_i(phase) / denom * amp;
      if (variant == ApproxVariant::kConjugate) {
        v *= exp(Complex(Real(0), -two_pi() * big_n));
      }
      out.value = v;
      out.regime = F1Regime::kExponential;
    } else {
      // Uniform transition form: the m = 1 erfc sum, on the side of the
      // surface the variant covers.
      Real phi_direct = variant == ApproxVariant::kDirect ? phi : Real(-phi);
      if (!(phi_direct >= -pi() + delta && phi_direct <= 3 * pi() - delta)) {
        throw DomainError("f1_asymptotic: angle " + dec_string(phi, 20) +
                          " outside the validity range of the requested variant");
      }
      Complex carg =
          variant == ApproxVariant::kDirect ? c_of_phi(phi) : conj(c_of_phi(-phi));
      Complex v = incgamma::erfc(carg * sqrt(absw / 2)) / Real(2);
      if (variant == ApproxVariant::kConjugate) v = -v;
      out.value = v;
      out.regime = F1Regime::kErfc;
    }
  }
  out.value = to_current(out.value);
  return out;
}

SmoothingPair level1_smoothing(const SurfacePoint& z, unsigned terms) {
  if (terms == 0) throw ConfigError("level1_smoothing requires at least one series term");
  const unsigned target = current_digits();
  SmoothingPair out;
  {
    PrecisionScope scope(target + 10);
    Real x = (pi() / 2 - z.angle()) * sqrt(pi() * z.modulus());
    Complex half_erfc = incgamma::erfc(Complex(x)) / Real(2);
    Complex sw = exp(mul_i(z.value()) * two_pi());
    out.plain = sw * reference::partial_sum(z, terms) * half_erfc;
    out.reciprocal = -(sw * reference::partial_sum_reciprocal(z, terms) * half_erfc);
  }
  out.plain = to_current(out.plain);
  out.reciprocal = to_current(out.reciprocal);
  return out;
}

SmoothingPair level2_smoothing(const SurfacePoint& z, unsigned terms) {
  if (terms == 0) throw ConfigError("level2_smoothing requires at least one series term");
  const unsigned target = current_digits();
  SmoothingPair out;
  {
    PrecisionScope scope(target + 10);
    Real x = (pi() / 2 - z.angle()) * sqrt(pi() * z.modulus());
    Complex e_wide = incgamma::erfc(Complex(x * sqrt(Real(2))));
    Complex e_base = incgamma::erfc(Complex(x));
    Complex w_plus = e_wide / Real(4) + e_base * e_base / Real(8);
    Complex w_minus = e_wide / Real(4) - e_base * e_base / Real(8);
    Complex sw = exp(mul_i(z.value()) * (2 * two_pi()));
    out.plain = sw * reference::partial_sum(z, terms) * w_plus;
    out.reciprocal = -(sw * reference::partial_sum_reciprocal(z, terms) * w_minus);
  }
  out.plain = to_current(out.plain);
  out.reciprocal = to_current(out.reciprocal);
  return out;
}

}  // namespace hyperstokes::smoothing
