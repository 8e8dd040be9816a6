#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "hyperstokes/errors.hpp"

namespace hyperstokes {

// Arbitrary-precision real with eager (non-expression-template) semantics so
// that intermediate results always materialize at a well-defined precision.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0, boost::multiprecision::allocate_dynamic>,
    boost::multiprecision::et_off>;

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline constexpr unsigned kMinDigits = 30;
inline constexpr unsigned kDefaultDigits = 50;

// Decimal working precision for a computation.
struct Precision {
  unsigned digits = kDefaultDigits;

  explicit Precision(unsigned d = kDefaultDigits) : digits(d) {
    if (d < kMinDigits) {
      throw ConfigError("precision must be at least 30 decimal digits, got " +
                        std::to_string(d));
    }
  }
};

inline unsigned current_digits() { return Real::default_precision(); }

// RAII guard establishing the thread default precision for every Real/Complex
// constructed inside the scope. Modules elevate internally and round results
// back to the caller's precision at their boundary.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  explicit PrecisionScope(Precision p) : PrecisionScope(p.digits) {}
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// Round x to the current default precision (copies otherwise preserve the
// source precision, which would leak elevated guard digits to callers).
inline Real to_current(const Real& x) {
  Real y;
  mpfr_set(y.backend().data(), x.backend().data(), MPFR_RNDN);
  return y;
}

inline Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real two_pi() { return 2 * pi(); }

inline Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real log10_e() { return 1 / log(Real(10)); }

// 10^(1-digits): the relative tolerance corresponding to full precision less
// one guard digit.
inline Real eps_for(unsigned digits) { return pow(Real(10), 1 - static_cast<int>(digits)); }

inline Real to_real(const Rational& q) {
  Real num(numerator(q).str());
  Real den(denominator(q).str());
  return num / den;
}

// Full-precision decimal serialization; round-trips through Real(string).
inline std::string dec_string(const Real& x, unsigned digits = 0) {
  if (digits == 0) digits = current_digits();
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace hyperstokes
