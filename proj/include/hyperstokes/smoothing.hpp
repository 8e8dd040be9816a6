#pragma once

#include <vector>

#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/surface.hpp"

// Smooth Stokes-transition machinery: the transition variable c(phi), erfc
// switching curves for the low-level remainders near a Stokes line, and the
// partition-sum ("erfc polynomial") uniform approximations of normalized
// equal-order, equal-singulant terminants.

namespace hyperstokes::smoothing {

// Transition variable c(phi): the root of
//   c^2 / 2 = 1 + i (phi - pi) - e^{i (phi - pi)}
// on the branch with series expansion (h = phi - pi)
//   c = -h - i h^2/6 + h^3/36 + i h^4/270 + ...,
// so that Re c >= 0 for phi <= pi and Re c < 0 for phi > pi. Computed by
// Newton iteration continued in phi with steps <= 1/25 rad, seeded by the
// series near phi = pi. Valid for phi in (-3 pi, 3 pi); DomainError outside,
// BranchError if a continuation step jumps branches (|dc| > 10 |dphi|).
Complex c_of_phi(const Real& phi);

enum class ApproxVariant {
  kDirect,     // coefficients 1/((2j)^{k_j} k_j!), argument c(phi)
  kConjugate,  // coefficients (-1)^{k_j}/((2j)^{k_j} k_j!), argument conj(c(-phi))
};

// One partition contribution to the erfc-polynomial sum. multiplicity[j-1]
// holds k_j for parts j = 1..m with k_1 + 2 k_2 + ... + m k_m = m.
struct PartitionTerm {
  std::vector<unsigned> multiplicity;
  Rational coefficient;  // signed rational prefactor
  Complex value;         // coefficient * prod_j erfc(...)^{k_j}
};

struct ErfcPolyApprox {
  unsigned m = 0;
  ApproxVariant variant = ApproxVariant::kDirect;
  Real phi;  // arg(sigma z), unbounded surface angle
  Real rho;  // big_n - |sigma z|
  std::vector<PartitionTerm> terms;
  Complex value;  // sum of the term values
};

// Partition-sum approximation of the normalized equal-singulant terminant
//
//   e^{-m sigma z} / ((2 pi i)^m z^{m(N-1)-n}) *
//       F^(m)(z; N, sigma; ...; N, sigma; N-n, sigma)
//
// ~ sum over partitions of m of  prod_j erfc^{k_j}(c(phi) sqrt(j |sigma z|/2))
//   / ((2j)^{k_j} k_j!),
//
// with error O(e^{-(m/2)|sigma z| c^2(phi)} / sqrt(|sigma z|)) through the
// transition strip. The conjugate variant approximates the same quantity
// additionally normalized by e^{-2 pi i m N}, with coefficients signed by
// (-1)^{k_j} and argument conj(c(-phi)). Only phi = arg(sigma z), |sigma z|,
// m and the variant enter the sum; big_n is recorded as rho metadata.
ErfcPolyApprox erfc_poly_approx(const SurfacePoint& z, const SurfacePoint& sigma, const Real& big_n,
                                unsigned m, ApproxVariant variant);

// Exact value of the partition sum when every erfc factor is 1 (phi = pi,
// where c = 0). Equals (1/2)_m / m! for the direct variant and
// (-1/2)_m / m! for the conjugate one; computed by exact enumeration, not
// from those closed forms, so the equality is a meaningful test.
Rational stokes_line_coefficient_sum(unsigned m, ApproxVariant variant);

enum class F1Regime {
  kErfc,         // uniform transition-strip form, (1/2) erfc(c(phi) sqrt(|sigma z|/2))
  kExponential,  // saddle-point form away from the transition
};

struct F1Asymptotic {
  Complex value;
  F1Regime regime;
};

// Large-|sigma z| approximation of the normalized one-level terminant
//   e^{-sigma z} / (2 pi i z^{N-1-n}) * F^(1)(z; N-n, sigma),
// where N = big_n = |sigma z| + rho with rho bounded and n = order_shift is
// a small fixed integer. For |phi| <= pi - delta (delta = 3/10) the
// saddle-point form
//   -i e^{(pi-phi) i N} / (1 + e^{-i phi}) * e^{-sigma z - |sigma z|} / sqrt(2 pi |sigma z|)
// is used (kExponential); elsewhere in (-pi + delta, 3 pi - delta) the
// uniform erfc form (kErfc, the m = 1 partition sum). The conjugate variant
// approximates the e^{-2 pi i N}-normalized value on the mirrored range.
// DomainError outside the stated phi ranges.
F1Asymptotic f1_asymptotic(const SurfacePoint& z, const SurfacePoint& sigma, const Real& big_n,
                           long order_shift, ApproxVariant variant);

// Smooth switching approximations of remainders near theta = arg z = pi/2.
struct SmoothingPair {
  Complex plain;       // approximates R (level below)
  Complex reciprocal;  // approximates the reciprocal-series remainder
};

// Level-0 remainders at optimal truncation N ~ floor(2 pi |z|), fixed term
// count M = terms:
//   R_N    ~  e^{2 pi i z} * partial_sum(z, M)            * (1/2) erfc(x),
//   R~_N   ~ -e^{2 pi i z} * partial_sum_reciprocal(z, M) * (1/2) erfc(x),
// with x = (pi/2 - theta) sqrt(pi |z|).
SmoothingPair level1_smoothing(const SurfacePoint& z, unsigned terms);

// Level-1 remainders at optimal truncation (N, M) ~ (4 pi |z|, 2 pi |z|),
// fixed K = terms:
//   R_{N,M}  ~  e^{4 pi i z} * partial_sum(z, K)            * W+,
//   R~_{N,M} ~ -e^{4 pi i z} * partial_sum_reciprocal(z, K) * W-,
// where W+- = (1/4) erfc(x sqrt 2) +- (1/8) erfc(x)^2, x as above. W+ rises
// from ~0 through 3/8 (at theta = pi/2) to ~1; W- rises to 1/8 and falls
// back to ~0.
SmoothingPair level2_smoothing(const SurfacePoint& z, unsigned terms);

}  // namespace hyperstokes::smoothing
