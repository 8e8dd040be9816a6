#include "hyperstokes/incgamma.hpp"

#include <cmath>
#include <vector>

#include "hyperstokes/errors.hpp"
#include "hyperstokes/reference.hpp"

namespace hyperstokes::incgamma {

namespace {

Complex complex_sin(const Complex& v) {
  return Complex(sin(v.re) * cosh(v.im), cos(v.re) * sinh(v.im));
}

bool is_nonpositive_integer(const Complex& a, long& n_out) {
  if (!a.im.is_zero()) return false;
  if (a.re > 0) return false;
  if (a.re != floor(a.re)) return false;
  Real nr = -a.re;
  if (nr > Real(1000000)) throw DomainError("upper: integer order too large");
  n_out = nr.convert_to<long>();
  return true;
}

bool cf_applicable(const SurfacePoint& w, const Real& abs_a) {
  return abs(w.angle()) <= 3 * pi() / 4 && w.modulus() >= 25 + abs_a;
}

// Modified Lentz evaluation of Gamma(a, w) = e^{-w} w^a / (w+1-a - 1(1-a)/
// (w+3-a - 2(2-a)/(w+5-a - ...))), relative-accurate away from the negative
// axis once |w| dominates |a|.
Complex cf_path(const Complex& a, const SurfacePoint& w) {
  const unsigned target = current_digits();
  Complex res;
  {
    PrecisionScope scope(target + 10);
    const Real tiny = pow(Real(10), -static_cast<int>(2 * target + 40));
    const Real tol = pow(Real(10), -static_cast<int>(target + 5));
    Complex wv = w.value();
    Complex b = wv + Complex(Real(1)) - a;
    if (abs(b) < tiny) b = Complex(tiny);
    Complex c = Complex(Real(1) / tiny);
    Complex d = Complex(Real(1)) / b;
    Complex h = d;
    const unsigned long max_iter = 200ul * target + 2000;
    bool converged = false;
    for (unsigned long i = 1; i <= max_iter; ++i) {
      Complex an = Complex(-Real(i)) * (Complex(Real(i)) - a);
      b = b + Complex(Real(2));
      d = an * d + b;
      if (abs(d) < tiny) d = Complex(tiny);
      c = b + an / c;
      if (abs(c) < tiny) c = Complex(tiny);
      d = Complex(Real(1)) / d;
      Complex delta = d * c;
      h = h * delta;
      if (abs(delta - Complex(Real(1))) < tol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw ConvergenceError("upper: continued fraction failed to converge");
    res = exp(Complex(Real(0)) - wv) * w.power(a) * h;
  }
  return to_current(res);
}

// Decimal digits of headroom needed to absorb the e^{|w|}-sized terms of the
// ascending series against an e^{-Re w}-sized result.
unsigned series_headroom(const SurfacePoint& w) {
  double absw = w.modulus().convert_to<double>();
  double rew = (w.modulus() * cos(w.angle())).convert_to<double>();
  double cancel = 0.4342944819 * (absw + (rew > 0 ? rew : 0.0));
  return static_cast<unsigned>(cancel) + 15;
}

Complex e1_series(const SurfacePoint& w) {
  const unsigned target = current_digits();
  Complex res;
  {
    PrecisionScope scope(target + series_headroom(w));
    const Real absw = w.modulus();
    const Real stop = pow(Real(10), -static_cast<int>(current_digits() - 2));
    Complex wv = w.value();
    Complex sum;
    Complex p(Real(1));  // p_k = (-w)^k / k!
    Real max_term(0);
    const unsigned long kmax =
        40ul * current_digits() + 10 * absw.convert_to<unsigned long>() + 200;
    bool converged = false;
    for (unsigned long k = 1; k <= kmax; ++k) {
      p = p * (Complex(Real(0)) - wv) / Complex(Real(k));
      Complex term = p / Complex(Real(k));
      sum = sum + term;
      Real mag = abs(term);
      if (mag > max_term) max_term = mag;
      if (Real(k) > absw + 2 && mag < max_term * stop) {
        converged = true;
        break;
      }
    }
    if (!converged) throw ConvergenceError("e1: series failed to converge");
    res = Complex(-euler_gamma()) - w.log() - sum;
  }
  return to_current(res);
}

Complex e1_dispatch(const SurfacePoint& w) {
  if (cf_applicable(w, Real(0))) return cf_path(Complex(Real(0)), w);
  return e1_series(w);
}

// Gamma(-n, w) = ((-1)^n / n!) [E_1(w) - e^{-w} sum_{j<n} (-1)^j j! / w^{j+1}]
Complex integer_path(long n, const SurfacePoint& w) {
  const unsigned target = current_digits();
  double absw = w.modulus().convert_to<double>();
  // When n! outgrows |w|^n the bracket difference no longer cancels; clamp at 0.
  double diff_cancel = n > 0 ? n * std::log10(absw) - std::lgamma(n + 1.0) / std::log(10.0) : 0.0;
  if (diff_cancel < 0) diff_cancel = 0;
  Complex res;
  {
    PrecisionScope scope(target + series_headroom(w) + static_cast<unsigned>(diff_cancel) + 5);
    Complex ev = e1_dispatch(w);
    Complex wv = w.value();
    Complex bracket = ev;
    if (n > 0) {
      Complex d = Complex(Real(1)) / wv;  // d_j = (-1)^j j! / w^{j+1}
      Complex dsum = d;
      for (long j = 1; j < n; ++j) {
        d = d * Complex(-Real(j)) / wv;
        dsum = dsum + d;
      }
      bracket = ev - exp(Complex(Real(0)) - wv) * dsum;
    }
    Integer fact = 1;
    for (long j = 2; j <= n; ++j) fact *= j;
    Real rf = to_real(Rational(fact));
    res = bracket / Complex(n % 2 == 0 ? rf : -rf);
  }
  return to_current(res);
}

// Gamma(a, w) = Gamma(a) - w^a sum_k (-w)^k / (k! (a+k)) for non-integer a.
Complex series_path(const Complex& a, const SurfacePoint& w) {
  const unsigned target = current_digits();
  double near_pole = 0.0;
  {
    double are = a.re.convert_to<double>();
    double aim = a.im.convert_to<double>();
    long kn = std::lround(-are);
    if (kn >= 0) {
      double dist = std::hypot(are + kn, aim);
      if (dist < 1.0 && dist > 0.0) near_pole = -std::log10(dist);
    }
  }
  Complex res;
  {
    PrecisionScope scope(target + series_headroom(w) + static_cast<unsigned>(near_pole) + 5);
    const Real absw = w.modulus();
    const Real stop = pow(Real(10), -static_cast<int>(current_digits() - 2));
    Complex wv = w.value();
    Complex sum;
    Complex p(Real(1));  // p_k = (-w)^k / k!
    Real max_term(0);
    const unsigned long kmax =
        40ul * current_digits() + 10 * absw.convert_to<unsigned long>() + 200;
    bool converged = false;
    for (unsigned long k = 0; k <= kmax; ++k) {
      Complex denom = a + Complex(Real(k));
      Complex term = p / denom;
      sum = sum + term;
      Real mag = abs(term);
      if (mag > max_term) max_term = mag;
      if (Real(k) > absw + 2 && mag < max_term * stop) {
        converged = true;
        break;
      }
      p = p * (Complex(Real(0)) - wv) / Complex(Real(k + 1));
    }
    if (!converged) throw ConvergenceError("upper: ascending series failed to converge");
    res = gamma(a) - w.power(a) * sum;
  }
  return to_current(res);
}

}  // namespace

Complex gamma(const Complex& v) {
  // Nested terminant quadratures evaluate gamma at the same few orders for
  // every node, so an exact-match memo (keyed on argument and working
  // precision) removes almost all repeated series work.
  struct Memo {
    unsigned digits;
    Complex arg;
    Complex val;
  };
  thread_local std::vector<Memo> memo;
  const unsigned digits = current_digits();
  for (const Memo& m : memo)
    if (m.digits == digits && m.arg.re == v.re && m.arg.im == v.im) return m.val;

  Complex res;
  if (v.im.is_zero() && v.re == floor(v.re)) {
    if (v.re <= 0) throw DomainError("gamma: pole at nonpositive integer");
    if (v.re <= 500) {
      long n = v.re.convert_to<long>();
      Integer f = 1;
      for (long j = 2; j < n; ++j) f *= j;
      res = Complex(to_real(Rational(f)));
    }
  }
  if (res.is_zero()) {
    PrecisionScope scope(digits + 8);
    if (v.re >= Real(1) / 2) {
      Complex gg = reference::g(SurfacePoint::from_value(v));
      Complex lg =
          (v - Complex(Real(1) / 2)) * log(v) - v + Complex(log(two_pi()) / 2) + gg;
      res = exp(lg);
    } else {
      Complex s = complex_sin(Complex(pi()) * v);
      if (abs(s).is_zero()) throw DomainError("gamma: pole");
      res = Complex(pi()) / (s * gamma(Complex(Real(1)) - v));
    }
  }
  res = to_current(res);
  if (memo.size() >= 16) memo.erase(memo.begin());
  memo.push_back(Memo{digits, v, res});
  return res;
}

Complex upper(const Complex& a, const SurfacePoint& w) {
  if (w.compare_angle(Rational(1)) > 0 || w.compare_angle(Rational(-1)) < 0)
    throw DomainError("upper: angle outside the principal window");
  long n = 0;
  if (is_nonpositive_integer(a, n)) {
    if (cf_applicable(w, abs(a))) return cf_path(a, w);
    return n == 0 ? e1_dispatch(w) : integer_path(n, w);
  }
  if (cf_applicable(w, abs(a))) return cf_path(a, w);
  return series_path(a, w);
}

Complex e1(const SurfacePoint& w) {
  if (w.compare_angle(Rational(1)) > 0 || w.compare_angle(Rational(-1)) < 0)
    throw DomainError("e1: angle outside the principal window");
  return e1_dispatch(w);
}

Complex erfc(const Complex& v) {
  if (v.re.is_zero() && v.im.is_zero()) return Complex(Real(1));
  if (v.re < 0) return Complex(Real(2)) - erfc(Complex(Real(0)) - v);
  Complex res;
  {
    PrecisionScope scope(current_digits() + 5);
    SurfacePoint w2 = SurfacePoint::from_value(v * v);
    res = upper(Complex(Real(1) / 2), w2) / Complex(sqrt(pi()));
  }
  return to_current(res);
}

}  // namespace hyperstokes::incgamma
