#pragma once

#include <ostream>
#include <string>

#include "hyperstokes/numbers.hpp"

namespace hyperstokes {

// Complex value on one sheet (principal argument); surface-aware powers and
// logs live in SurfacePoint. Backed by a pair of Reals because the mpc
// library is not a dependency and boost has no mpfr complex adaptor here.
struct Complex {
  Real re{};
  Real im{};

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)) {}
  explicit Complex(long r) : re(r) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex operator-() const { return {-re, -im}; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator+(Complex a, const Real& s) {
  a.re += s;
  return a;
}
inline Complex operator+(const Real& s, Complex a) {
  a.re += s;
  return a;
}
inline Complex operator-(Complex a, const Real& s) {
  a.re -= s;
  return a;
}
inline Complex operator-(const Real& s, const Complex& a) {
  return {s - a.re, -a.im};
}

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }

inline Real abs(const Complex& a) {
  using boost::multiprecision::hypot;
  return hypot(a.re, a.im);
}

inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }

// Principal argument in (-pi, pi]; arg(0) = 0 by convention.
inline Real arg(const Complex& a) {
  using boost::multiprecision::atan2;
  if (a.is_zero()) return Real(0);
  return atan2(a.im, a.re);
}

inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  if (d.is_zero()) throw DomainError("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex operator/(Complex a, const Real& s) {
  a.re /= s;
  a.im /= s;
  return a;
}
inline Complex operator/(const Real& s, const Complex& b) { return Complex(s) / b; }

inline bool operator==(const Complex& a, const Complex& b) {
  return a.re == b.re && a.im == b.im;
}

inline Complex exp(const Complex& a) {
  using std::exp;
  Real m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

// Principal log; error on zero.
inline Complex log(const Complex& a) {
  if (a.is_zero()) throw DomainError("complex log of zero");
  return {log(abs(a)), arg(a)};
}

inline Complex sqrt(const Complex& a) {
  if (a.is_zero()) return Complex();
  Real m = sqrt(abs(a));
  Real half_arg = arg(a) / 2;
  return {m * cos(half_arg), m * sin(half_arg)};
}

inline Complex from_polar(const Real& modulus, const Real& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

inline Complex i_unit() { return {Real(0), Real(1)}; }

// i*a and -i*a without multiplications, used in pervasive 2*pi*i prefactors.
inline Complex mul_i(const Complex& a) { return {-a.im, a.re}; }
inline Complex mul_minus_i(const Complex& a) { return {a.im, -a.re}; }

inline std::string to_string(const Complex& a) {
  return "(" + dec_string(a.re) + ", " + dec_string(a.im) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Complex& a) {
  return os << to_string(a);
}

inline Complex to_current(const Complex& a) {
  return {to_current(a.re), to_current(a.im)};
}

}  // namespace hyperstokes
