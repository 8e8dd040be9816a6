#pragma once

#include <vector>

#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/reference.hpp"
#include "hyperstokes/surface.hpp"

// One- and two-stage hyperasymptotic re-expansions of the scaled-gamma
// remainders, exact higher-level remainder extraction by subtraction,
// truncation schedules, the smooth Stokes-multiplier curves near
// arg z = pi/2, and the piecewise-constant multipliers they interpolate.

namespace hyperstokes::hyper {

// Truncation indices of a (possibly nested) expansion. Levels use the leading
// prefix: level 0 uses big_n only; level 1 adds big_m; level 2 adds big_k.
struct TruncationScheme {
  unsigned level = 0;
  unsigned big_n = 0;
  unsigned big_m = 0;
  unsigned big_k = 0;
};

// Near-optimal schedule: successive indices step down by floor(2 pi |z|),
// i.e. N = floor(2 pi absz) * (level + 1) pattern via floor((level+1-j) *
// 2 pi absz) for the j-th index.
TruncationScheme optimal_scheme(const Real& absz, unsigned level);

// Working decimal precision sufficient to extract the level-th remainder at
// modulus absz: each re-expansion stage cancels roughly 2 pi |z| log10(e)
// digits, plus slack for over-truncated leading sums and algebraic factors.
unsigned scheduled_digits(const Real& absz, unsigned level);

// The two series variants share every terminant value, so the sums are
// always produced as a pair.
struct LevelPair {
  Complex plain;       // term group of the Gamma* expansion
  Complex reciprocal;  // term group of the 1/Gamma* expansion
};

// One-stage re-expansion sums: for each m < big_m the difference of the
// first-level terminants with singulants 2 pi e^{+- i pi/2},
//   plain      +=  (-1)^m gamma_m [F1(z; N-m, 2pi i) - F1(z; N-m, -2pi i)],
//   reciprocal +=        -gamma_m [F1(z; N-m, 2pi i) - F1(z; N-m, -2pi i)],
// all times 1/(2 pi i z^{N-1}). big_m = 0 returns zeros.
LevelPair level1_terms(const SurfacePoint& z, unsigned big_n, unsigned big_m);

// Two-stage re-expansion sums: for each k < big_k the four second-level
// terminants F2(z; N-M+1, sigma_1; M-k, sigma_2) over singulant pairs
// sigma_j = 2 pi e^{+- i pi/2} -- equal-direction pairs positively, mixed
// pairs negatively -- weighted by (-1)^k gamma_k (plain) or
// gamma_k (reciprocal), times 1/((2 pi i)^2 z^{N-1}). Each sum also carries
// one one-level terminant at the doubled singulant, compensating the
// residue density picked up when the staggered coincident-ray contour is
// moved to the side the re-expansion derivation uses:
//   plain      += -(-1)^k gamma_k F1(z; N-k, 4 pi e^{-i pi/2}) / (2 pi i z^{N-1}),
//   reciprocal +=        -gamma_k F1(z; N-k, 4 pi e^{+i pi/2}) / (2 pi i z^{N-1}).
// big_k = 0 returns zeros.
LevelPair level2_terms(const SurfacePoint& z, unsigned big_n, unsigned big_m, unsigned big_k);

// Remainder after the level-1 expansion: oracle - partial_sum(big_n)
// - level1_terms. The report's partial field holds everything subtracted.
// Throws PrecisionError when cancellation leaves fewer than 10 digits.
reference::RemainderReport remainder_level1(const SurfacePoint& z, unsigned big_n,
                                            unsigned big_m);
reference::RemainderReport remainder_level1_reciprocal(const SurfacePoint& z, unsigned big_n,
                                                       unsigned big_m);

// Remainder after the level-2 expansion (subtracts level2_terms as well).
reference::RemainderReport remainder_level2(const SurfacePoint& z, unsigned big_n, unsigned big_m,
                                            unsigned big_k);
reference::RemainderReport remainder_level2_reciprocal(const SurfacePoint& z, unsigned big_n,
                                                       unsigned big_m, unsigned big_k);

// Independent route to the same level-1 remainder: direct quadrature of the
// contour representation
//   R_{N,M}(z) = (1/(2 pi i) z^N) [ int_0^[pi/2-] e^{2 pi i t} t^{N-1}
//                / (1 - t/z) R_M(t) dt  -  int_0^[-pi/2+] e^{-2 pi i t} ... ],
// with R_M from the reference oracle (the reciprocal variant samples the
// level-0 remainder of 1/Gamma* through R_M(t e^{-+ pi i}) and flips signs).
// Requires |arg z| < pi/2 - 1/10 so both contours clear the pole at t = z.
// Slow; serves as the cross-check of the subtraction route.
Complex remainder_level1_quadrature(const SurfacePoint& z, unsigned big_n, unsigned big_m,
                                    bool reciprocal, const Real& rel_tol);

enum class MultiplierKind {
  kPlain,       // S: remainder of Gamma* over e^{4 pi i z}
  kReciprocal,  // S~: remainder of 1/Gamma* over -e^{4 pi i z}
};

struct MultiplierSample {
  Rational theta_pi;  // arg z as an exact multiple of pi
  Complex s;
  MultiplierKind kind = MultiplierKind::kPlain;
  unsigned big_n = 0;
  unsigned big_m = 0;
  unsigned digits_used = 0;
};

// Inclusive grid of exact pi-multiples from lo to hi in steps of step.
std::vector<Rational> pi_multiple_grid(const Rational& lo, const Rational& hi,
                                       const Rational& step);

// The smooth second-stage Stokes multiplier along |z| = absz:
//   S(theta)  =  R_{N,M}(absz e^{i theta})   e^{-4 pi i z},
//   S~(theta) = -R~_{N,M}(absz e^{i theta})  e^{-4 pi i z},
// at the transition-resolving schedule N = floor(4 pi absz),
// M = floor(2 pi absz). Each sample runs at scheduled_digits (raised on
// PrecisionError) and records the working precision it used.
std::vector<MultiplierSample> stokes_multiplier_curve(const Real& absz, MultiplierKind kind,
                                                      const std::vector<Rational>& theta_pi_grid);

// The discontinuous (Heaviside) multiplier values the smooth curves
// interpolate, as exact rationals: for the plain series the k-th multiplier
// is 0 for |theta| < pi/2, (1/2)_k / k! at theta = +-pi/2 and 1 for
// pi/2 < |theta| < pi; the reciprocal-series multiplier follows the same
// pattern for k = 1 but for k >= 2 equals -(-1/2)_k / k! on the line and 0
// on both sides. theta is given as an exact multiple of pi, |theta| < pi.
struct DiscontinuousPair {
  Rational s;
  Rational s_tilde;
};
DiscontinuousPair discontinuous_multipliers(unsigned k, const Rational& theta_pi_multiple);

}  // namespace hyperstokes::hyper
