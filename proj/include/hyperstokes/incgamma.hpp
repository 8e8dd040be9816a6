#pragma once

#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/surface.hpp"

namespace hyperstokes::incgamma {

// Gamma(v) for complex v (principal value), via the scaled-gamma evaluator
// with reflection for Re v < 1/2 and an exact factorial fast path at small
// positive integers.
Complex gamma(const Complex& v);

// Upper incomplete gamma Gamma(a, w) for complex a and a point w given with
// explicit argument; requires |arg w| <= pi (callers reduce to that window
// first; values on other sheets follow from the evaluators built on top).
// Path selection: continued fraction away from the negative axis at large
// |w|, otherwise power series (with interior precision elevation to absorb
// the e^{|w|} cancellation), with a descent formula at nonpositive integer a.
Complex upper(const Complex& a, const SurfacePoint& w);

// Exponential integral E_1(w) on |arg w| <= pi.
Complex e1(const SurfacePoint& w);

// Complementary error function, accurate in the relative sense even deep in
// the exponentially small region Re w >> 1.
Complex erfc(const Complex& w);

}  // namespace hyperstokes::incgamma
