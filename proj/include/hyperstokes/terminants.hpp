#pragma once

#include <vector>

#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/surface.hpp"

namespace hyperstokes::terminants {

// One level of a nested terminant integral: the power t^{order-1} and the
// exponential direction e^{singulant * t} of that level.
struct TerminantLevel {
  Complex order;          // Re(order) > 1
  SurfacePoint singulant;
};
using TerminantSpec = std::vector<TerminantLevel>;

// Throws DomainError unless the spec is nonempty and every level has
// Re(order) > 1 (convergence of the nested representation at the origin).
void validate(const TerminantSpec& spec);

// True when some adjacent pair of levels shares its singulant direction
// modulo 2*pi (the case where the epsilon-rotation prescription is needed to
// make the simultaneous multi-contour definition unambiguous).
bool has_coincident_rays(const TerminantSpec& spec);

// First-level terminant
//   F(z; N, sigma) = int_ray e^{sigma t} t^{N-1} / (z - t) dt
// in closed form through the upper incomplete gamma function, valid on every
// sheet of z via the sheet-connection identity.
Complex F1(const SurfacePoint& z, const Complex& order, const SurfacePoint& singulant);

// Direct numerical integration of the same defining ray integral; requires
// |arg(singulant * z)| < pi strictly. Slow; used as an independent oracle for
// the closed form.
Complex F1_ray_quadrature(const SurfacePoint& z, const Complex& order,
                          const SurfacePoint& singulant, const Real& rel_tol);

// How to treat coincident singulant rays in the multi-level evaluator:
//  - kStaggeredExact: evaluate the nested representation directly, with each
//    contour rotated slightly off the pole directions (exact: no limit is
//    taken; the rotation only moves contours within their homotopy class).
//  - kEpsilonLimit: rotate the singulants themselves apart by multiples of a
//    small epsilon, evaluate, and extrapolate epsilon -> 0 (the defining
//    limit, kept as an independent cross-check of the first mode).
enum class CoincidentMode { kStaggeredExact, kEpsilonLimit };

struct QuadOptions {
  Real rel_tol = Real(0);  // 0: derive from the working precision
  CoincidentMode mode = CoincidentMode::kStaggeredExact;
  Real epsilon0 = Real(0);  // base rotation for kEpsilonLimit; 0: default 3/20
};

struct FmResult {
  Complex value;
  Real err_estimate;
};

// Multi-level terminant by nested contour quadrature with the innermost level
// in closed form. Valid on every sheet of z (sheet reduction applied level by
// level through the connection identity).
FmResult Fm_quadrature(const SurfacePoint& z, const TerminantSpec& spec,
                       const QuadOptions& opts = {});

// Closed evaluation of the m-level terminant when all levels share one order
// and one singulant: the exponential of the one-level values at stretched
// parameters,
//   F^(m) = Y_m,  exp(sum_k y_k x^k) = sum_m Y_m x^m,
//   y_k = (2 pi i)^{k-1} / k * F(z; k*order - k + 1, k*singulant).
Complex F_bell(const SurfacePoint& z, const Complex& order, const SurfacePoint& singulant,
               unsigned levels);

// One-dimensional reduction of the two-level terminant with opposite
// singulant directions, sigma_2 = sigma_1 e^{+-i pi}:
//   F(z; A, sigma, B, sigma e^{-i pi})
//     = e^{i pi B} int_0^inf u^{B-1} (1+u)^{1-A-B} F(z(1+u); A+B-1, sigma) du,
// and the e^{+i pi} variant equals e^{-2 pi i (B-1)} times the same integral.
// Requires |arg(sigma * z)| <= pi. Dual route to Fm_quadrature for the mixed
// sums of the second re-expansion stage.
Complex F2_mixed_reduced(const SurfacePoint& z, const Complex& order1,
                         const SurfacePoint& sigma1, const Complex& order2,
                         int second_direction_sign, const Real& rel_tol);

// Terminant value at z = 0 (a regular point of the function):
//   F^(m)(0; spec) = e^{i pi N_1} sigma_1^{-(N_1-1)}
//                    int_0^inf e^{-u} u^{N_1-2} F^(m-1)(t(u); tail) du
// with t(u) = (u/|sigma_1|) e^{i(pi - arg sigma_1)}. Requires Re(order_1) > 2
// for a decaying integrand at the origin.
Complex F_origin(const TerminantSpec& spec, const Real& rel_tol);

// Relative residual of the sheet-connection identity
//   F^(m)(z e^{-2 pi i}) - F^(m)(z) + 2 pi i e^{sigma_1 z} z^{N_1-1}
//                                       * F^(m-1)(z; tail) = 0,
// normalized by the largest participating magnitude. Near zero up to
// quadrature error when the evaluators are consistent across sheets.
Complex connection_residual(const SurfacePoint& z, const TerminantSpec& spec,
                            const QuadOptions& opts = {});

// Relative residual of the order-shift recurrence for equal leading orders
// (levels entries of `order`, last entry order - shift):
//   z F^(m)(z; N,..,N,N-n) = F^(m)(z; N,..,N,N-n+1)
//     - sum_{k=0}^{m-1} F^(k)(z; N,..,N) F^(m-k)(0; first order + 1),
// where the k-th origin factor carries the last m-k orders of the left-hand
// spec with its first entry incremented (single-entry case: N-n+1).
Complex recurrence_shift_residual(const SurfacePoint& z, const Complex& order,
                                  const SurfacePoint& singulant, unsigned levels, unsigned shift,
                                  const Real& rel_tol);

}  // namespace hyperstokes::terminants
