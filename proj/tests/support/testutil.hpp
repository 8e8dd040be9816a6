#pragma once

// Shared helpers for the unit suites: frozen-literal parsing, relative
// comparison with readable failure output, and a deterministic generator of
// exact rational test inputs.

#include <random>
#include <string>

#include "doctest.h"
#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/surface.hpp"
#include "support/frozen.hpp"

namespace hyperstokes::testing {

inline Complex lit(const frozen::ComplexLiteral& v) {
  return Complex(Real(v.re), Real(v.im));
}

// |a - b| / max(|a|, |b|); 0 when both vanish.
inline Real rel_diff(const Complex& a, const Complex& b) {
  Real scale = abs(a);
  Real sb = abs(b);
  if (sb > scale) scale = sb;
  if (scale.is_zero()) return Real(0);
  return abs(a - b) / scale;
}

inline void check_rel(const Complex& got, const Complex& want, const Real& tol,
                      const std::string& what) {
  Real rd = rel_diff(got, want);
  INFO(what, ": got ", to_string(got), " want ", to_string(want), " rel ",
       dec_string(rd, 3), " tol ", dec_string(tol, 3));
  CHECK(rd <= tol);
}

inline void check_rel(const Complex& got, const frozen::ComplexLiteral& want, const Real& tol,
                      const std::string& what) {
  check_rel(got, lit(want), tol, what);
}

// Deterministic rational fuzz inputs: exact dyadic-style rationals so every
// run sees the same values at any precision.
class RationalFuzz {
 public:
  explicit RationalFuzz(unsigned seed) : engine_(seed) {}

  // Uniform rational in [lo, hi] with the given denominator.
  Rational rational(const Rational& lo, const Rational& hi, long denom = 64) {
    std::uniform_int_distribution<long> pick(0, denom);
    Rational span = hi - lo;
    Rational step = span * Rational(pick(engine_), denom);
    Rational out = lo + step;
    return out;
  }

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> pick(lo, hi);
    return pick(engine_);
  }

 private:
  std::mt19937 engine_;
};

}  // namespace hyperstokes::testing
