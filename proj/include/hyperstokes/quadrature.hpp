#pragma once

#include <functional>
#include <vector>

#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"

namespace hyperstokes::quadrature {

struct QuadResult {
  Complex value;
  Real err_estimate;
  unsigned long evals = 0;
};

struct GLRule {
  std::vector<Real> nodes;    // in (-1, 1), symmetric
  std::vector<Real> weights;
};

// Gauss-Legendre rule with n points at the current working precision.
// Nodes are generated by Newton iteration on P_n and cached per
// (n, precision).
const GLRule& gauss_legendre(unsigned n);

// Adaptive integration of a complex-valued function over [a, b] with an
// embedded G_n / G_2n pair; panels split until the pairwise difference meets
// the length-proportional share of abs_tol. split_points seeds the initial
// panel boundaries (pole feet, envelope peaks).
QuadResult integrate(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                     const Real& abs_tol, std::vector<Real> split_points = {});

// Envelope description |f(s)| <~ C e^{-decay_rate s} s^{power} used to pick
// the truncation point of a half-line integral.
struct HalflineEnvelope {
  Real decay_rate;  // > 0
  Real power;       // >= 0
};

// Integration over [0, inf) of a function with exponentially decaying
// envelope; truncation point chosen so the discarded tail is below the
// requested relative tolerance times the sampled scale.
QuadResult integrate_halfline(const std::function<Complex(const Real&)>& f,
                              const HalflineEnvelope& env, const Real& rel_tol,
                              std::vector<Real> split_points = {});

}  // namespace hyperstokes::quadrature
