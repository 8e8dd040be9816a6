#include "hyperstokes/surface.hpp"

#include <utility>

#include "hyperstokes/errors.hpp"

namespace hyperstokes {

SurfacePoint::SurfacePoint(Real modulus, Rational pi_multiple, Real offset_radians)
    : modulus_(std::move(modulus)),
      pi_multiple_(std::move(pi_multiple)),
      offset_(std::move(offset_radians)) {
  if (!(modulus_ > 0)) {
    throw DomainError("surface point requires modulus > 0, got " + dec_string(modulus_));
  }
}

SurfacePoint SurfacePoint::from_value(const Complex& v) {
  return SurfacePoint(abs(v), Rational(0), arg(v));
}

Real SurfacePoint::angle() const { return to_real(pi_multiple_) * pi() + offset_; }

Complex SurfacePoint::value() const { return from_polar(modulus_, angle()); }

Complex SurfacePoint::log() const {
  using std::log;
  return {log(modulus_), angle()};
}

Complex SurfacePoint::power(const Complex& w) const { return exp(w * log()); }

SurfacePoint SurfacePoint::rotated(const Rational& pi_multiple) const {
  return SurfacePoint(modulus_, pi_multiple_ + pi_multiple, offset_);
}

SurfacePoint SurfacePoint::rotated_radians(const Real& radians) const {
  return SurfacePoint(modulus_, pi_multiple_, offset_ + radians);
}

SurfacePoint SurfacePoint::scaled(const Real& factor) const {
  if (!(factor > 0)) {
    throw DomainError("surface scaling factor must be positive");
  }
  return SurfacePoint(modulus_ * factor, pi_multiple_, offset_);
}

SurfacePoint SurfacePoint::conjugated() const {
  return SurfacePoint(modulus_, -pi_multiple_, -offset_);
}

int SurfacePoint::compare_angle(const Rational& bound_pi_multiple) const {
  if (offset_.is_zero()) {
    if (pi_multiple_ < bound_pi_multiple) return -1;
    if (pi_multiple_ > bound_pi_multiple) return 1;
    return 0;
  }
  Real diff = angle() - to_real(bound_pi_multiple) * pi();
  if (diff.is_zero()) return 0;
  return diff < 0 ? -1 : 1;
}

bool SurfacePoint::on_negative_axis() const {
  if (!offset_.is_zero()) return false;
  // angle = pi * p/q congruent to pi mod 2 pi  <=>  (p/q - 1)/2 is an integer
  Rational t = (pi_multiple_ - 1) / 2;
  return denominator(t) == 1;
}

std::string SurfacePoint::describe() const {
  std::string s = "(modulus " + dec_string(modulus_) + ", angle " +
                  numerator(pi_multiple_).str() + "/" + denominator(pi_multiple_).str() + "*pi";
  if (!offset_.is_zero()) s += " + " + dec_string(offset_);
  return s + ")";
}

SurfacePoint surface_mul(const SurfacePoint& a, const SurfacePoint& b) {
  return SurfacePoint(a.modulus() * b.modulus(), a.pi_multiple() + b.pi_multiple(),
                      a.offset() + b.offset());
}

}  // namespace hyperstokes
