#pragma once

#include <ostream>
#include <vector>

#include "hyperstokes/numbers.hpp"

namespace hyperstokes::coeffs {

// Exact Bernoulli number B_n (B_1 = -1/2 convention). Cached, lazily extended.
const Rational& bernoulli(unsigned n);

// a_n = B_{2n} / (2n (2n-1)) for n >= 1: the coefficient of z^{1-2n} in the
// divergent large-z series of g(z) = log Gamma*(z).
Rational log_gamma_coeff(unsigned n);

// gamma_n: coefficients with 1/Gamma*(z) ~ sum_n gamma_n z^{-n} and
// Gamma*(z) ~ sum_n (-1)^n gamma_n z^{-n}. Exact; cached, lazily extended.
const Rational& stirling_gamma(unsigned n);

// (-1)^n gamma_n, i.e. the coefficient of z^{-n} in the Gamma* series itself.
Rational gamma_star_coeff(unsigned n);

// Complete Bell sequence of the exponential: given y_1..y_n (y[0] unused is
// NOT expected; pass y starting at index 0 = y_1), returns Y_0..Y_n with
//   exp(sum_{k>=1} y_k t^k) = sum_{m>=0} Y_m t^m,
//   Y_m = (1/m) sum_{k=1}^{m} k y_k Y_{m-k},  Y_0 = 1.
// Shared by the exact coefficient construction (Ring = Rational) and the
// equal-singulant hyperterminant identity (Ring = Complex).
template <typename Ring>
std::vector<Ring> bell_complete_sequence(const std::vector<Ring>& y) {
  const std::size_t n = y.size();
  std::vector<Ring> out(n + 1);
  out[0] = Ring(1L);
  for (std::size_t m = 1; m <= n; ++m) {
    Ring acc(0L);
    for (std::size_t k = 1; k <= m; ++k) {
      acc += Ring(static_cast<long>(k)) * y[k - 1] * out[m - k];
    }
    out[m] = acc / Ring(static_cast<long>(m));
  }
  return out;
}

enum class DumpFormat { kCsv, kJson };

// Writes n, gamma_n, a_n, B_{2n} as exact numerator/denominator pairs for
// n = 0..nmax.
void dump(std::ostream& os, unsigned nmax, DumpFormat format);

}  // namespace hyperstokes::coeffs
