#pragma once

#include <string>

#include "hyperstokes/complex.hpp"
#include "hyperstokes/numbers.hpp"

namespace hyperstokes {

// A point on the Riemann surface of the logarithm: modulus > 0 together with
// an unbounded angle. The angle is stored as an exact rational multiple of pi
// plus a real offset so that sheet bookkeeping (window reduction, pole
// detection, Stokes-line placement) stays exact whenever the inputs are
// rational multiples of pi. Immutable: all operations return new points.
class SurfacePoint {
 public:
  SurfacePoint(Real modulus, Rational pi_multiple, Real offset_radians = Real(0));

  // Principal-angle embedding of a plain complex value (angle in (-pi, pi],
  // carried entirely in the offset part).
  static SurfacePoint from_value(const Complex& v);

  const Real& modulus() const { return modulus_; }
  const Rational& pi_multiple() const { return pi_multiple_; }
  const Real& offset() const { return offset_; }
  bool pure_rational_angle() const { return offset_.is_zero(); }

  Real angle() const;
  Complex value() const;
  // log on the surface: ln(modulus) + i*angle, the branch the point lives on.
  Complex log() const;
  // z^w = exp(w log z) with the surface branch of log.
  Complex power(const Complex& w) const;
  Complex power(const Real& w) const { return power(Complex(w)); }

  SurfacePoint rotated(const Rational& pi_multiple) const;
  SurfacePoint rotated_radians(const Real& radians) const;
  SurfacePoint scaled(const Real& factor) const;
  SurfacePoint conjugated() const;

  // Sign of (angle - bound*pi): -1, 0 or +1. Exact when the angle has no
  // offset part; otherwise decided numerically at the current precision.
  int compare_angle(const Rational& bound_pi_multiple) const;

  // True when the angle is congruent to pi modulo 2*pi (the ray carrying the
  // poles of Gamma*).
  bool on_negative_axis() const;

  std::string describe() const;

 private:
  Real modulus_;
  Rational pi_multiple_;
  Real offset_;
};

SurfacePoint surface_mul(const SurfacePoint& a, const SurfacePoint& b);

}  // namespace hyperstokes
