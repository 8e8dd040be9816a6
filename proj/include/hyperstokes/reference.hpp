#pragma once

#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/surface.hpp"

namespace hyperstokes::reference {

// Value of Gamma* (or 1/Gamma*) together with an honest accuracy estimate.
struct GammaStarValue {
  Complex value;
  Real est_rel_error;
};

// g(z) = log Gamma*(z) on the Riemann surface of the logarithm, where
// Gamma*(z) = Gamma(z) / (sqrt(2 pi) z^{z-1/2} e^{-z}) on the principal
// sheet and g continues analytically (normalized by g -> 0 as z -> +inf).
// Throws PoleError at the poles (negative integers reached at angles
// congruent to pi mod 2 pi). For |angle| > pi at exactly integer modulus the
// continuation path is pinched by a pole; the value returned there is the
// limit of nearby moduli, which is well-defined for exp(g) but fixes one of
// the 2*pi*i-equivalent branches of g itself.
Complex g(const SurfacePoint& z);

GammaStarValue gamma_star(const SurfacePoint& z);
GammaStarValue reciprocal_gamma_star(const SurfacePoint& z);

// Partial sums of the divergent Stirling-type series:
//   Gamma*(z)   ~ sum_n (-1)^n gamma_n z^{-n}   (plain)
//   1/Gamma*(z) ~ sum_n gamma_n z^{-n}          (reciprocal)
Complex partial_sum(const SurfacePoint& z, unsigned n_terms);
Complex partial_sum_reciprocal(const SurfacePoint& z, unsigned n_terms);

struct RemainderReport {
  Complex oracle;
  Complex partial;
  Complex remainder;   // oracle - partial
  Real est_rel_error;  // relative to |remainder|
  unsigned digits_lost;
};

// Truncation remainder of the level-0 expansion after n_terms terms,
// computed by subtracting the partial sum from the reference value.
// Throws PrecisionError if cancellation leaves fewer than 10 significant
// digits at the current working precision.
RemainderReport remainder_level0(const SurfacePoint& z, unsigned n_terms);
RemainderReport remainder_level0_reciprocal(const SurfacePoint& z, unsigned n_terms);

}  // namespace hyperstokes::reference
