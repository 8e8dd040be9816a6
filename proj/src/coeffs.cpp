#include "hyperstokes/coeffs.hpp"

#include <cstddef>
#include <vector>

#include "hyperstokes/errors.hpp"

namespace hyperstokes::coeffs {

namespace {

// B_m = -(1/(m+1)) sum_{k<m} C(m+1, k) B_k, exact.
void extend_bernoulli(std::vector<Rational>& b, unsigned n) {
  if (b.empty()) {
    b.emplace_back(1);
  }
  while (b.size() <= n) {
    const unsigned m = static_cast<unsigned>(b.size());
    Rational acc(0);
    Integer binom(1);  // C(m+1, 0)
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b.push_back(-acc / Rational(m + 1));
  }
}

std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache;
  return cache;
}

std::vector<Rational>& gamma_cache() {
  static std::vector<Rational> cache;
  return cache;
}

// Extends the gamma_n cache through index n using the complete Bell sequence
// of the g-series: exp(sum a_k z^{1-2k}) coefficient of z^{-m} is Y_m with
// y_j = a_{(j+1)/2} for odd j, 0 otherwise; gamma_m = (-1)^m Y_m.
void extend_gamma(std::vector<Rational>& g, unsigned n) {
  if (g.size() > n) return;
  std::vector<Rational> y(n);
  for (std::size_t j = 1; j <= n; j += 2) {
    y[j - 1] = log_gamma_coeff(static_cast<unsigned>((j + 1) / 2));
  }
  std::vector<Rational> bell = bell_complete_sequence(y);
  g.resize(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    g[m] = (m % 2 == 0) ? bell[m] : -bell[m];
  }
}

}  // namespace

const Rational& bernoulli(unsigned n) {
  auto& cache = bernoulli_cache();
  if (cache.size() <= n) extend_bernoulli(cache, n);
  return cache[n];
}

Rational log_gamma_coeff(unsigned n) {
  if (n == 0) throw DomainError("log_gamma_coeff defined for n >= 1");
  const Rational& b = bernoulli(2 * n);
  return b / Rational(2 * n * (2 * n - 1));
}

const Rational& stirling_gamma(unsigned n) {
  auto& cache = gamma_cache();
  if (cache.size() <= n) extend_gamma(cache, n);
  return cache[n];
}

Rational gamma_star_coeff(unsigned n) {
  const Rational& g = stirling_gamma(n);
  return (n % 2 == 0) ? g : -g;
}

void dump(std::ostream& os, unsigned nmax, DumpFormat format) {
  auto rat = [](const Rational& q, const char* num_key, const char* den_key,
                DumpFormat f) -> std::string {
    if (f == DumpFormat::kCsv) {
      return numerator(q).str() + "," + denominator(q).str();
    }
    return std::string("\"") + num_key + "\":\"" + numerator(q).str() + "\",\"" + den_key +
           "\":\"" + denominator(q).str() + "\"";
  };
  if (format == DumpFormat::kCsv) {
    os << "n,gamma_num,gamma_den,a_num,a_den,b2n_num,b2n_den\n";
    for (unsigned n = 0; n <= nmax; ++n) {
      Rational a = (n == 0) ? Rational(0) : log_gamma_coeff(n);
      os << n << "," << rat(stirling_gamma(n), "", "", format) << ","
         << rat(a, "", "", format) << "," << rat(bernoulli(2 * n), "", "", format) << "\n";
    }
    return;
  }
  os << "[";
  for (unsigned n = 0; n <= nmax; ++n) {
    Rational a = (n == 0) ? Rational(0) : log_gamma_coeff(n);
    os << (n ? "," : "") << "{\"n\":" << n << ","
       << rat(stirling_gamma(n), "gamma_num", "gamma_den", format) << ","
       << rat(a, "a_num", "a_den", format) << ","
       << rat(bernoulli(2 * n), "b2n_num", "b2n_den", format) << "}";
  }
  os << "]\n";
}

}  // namespace hyperstokes::coeffs
