#include "hyperstokes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <utility>

#include "hyperstokes/errors.hpp"

namespace hyperstokes::quadrature {

namespace {

// Legendre P_n(x) and its derivative via the three-term recurrence.
std::pair<Real, Real> legendre_and_derivative(unsigned n, const Real& x) {
  Real p0(1), p1 = x;
  if (n == 0) return {p0, Real(0)};
  for (unsigned k = 1; k < n; ++k) {
    Real p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  Real dp = n * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

GLRule build_rule(unsigned n) {
  GLRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  PrecisionScope guard(current_digits() + 10);
  const Real tol = eps_for(current_digits() - 4);
  for (unsigned k = 0; k < (n + 1) / 2; ++k) {
    double seed = std::cos(3.14159265358979 * (k + 0.75) / (n + 0.5));
    Real x(seed);
    for (int it = 0; it < 80; ++it) {
      auto [p, dp] = legendre_and_derivative(n, x);
      Real dx = p / dp;
      x -= dx;
      if (abs(dx) < tol) break;
      if (it == 79) throw ConvergenceError("Gauss-Legendre node iteration did not converge");
    }
    auto [p, dp] = legendre_and_derivative(n, x);
    (void)p;
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[k] = -x;  // ascending order: seeds start near +1
    rule.weights[k] = w;
    rule.nodes[n - 1 - k] = x;
    rule.weights[n - 1 - k] = w;
  }
  return rule;
}

unsigned base_points(unsigned digits) { return 18 + digits / 2; }

}  // namespace

const GLRule& gauss_legendre(unsigned n) {
  static std::map<std::pair<unsigned, unsigned>, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, current_digits());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_rule(n)).first;
  return it->second;
}

namespace {

Complex panel_sum(const GLRule& rule, const std::function<Complex(const Real&)>& f, const Real& a,
                  const Real& b, unsigned long& evals) {
  Real mid = (a + b) / 2, half = (b - a) / 2;
  Complex total(Real(0), Real(0));
  for (size_t k = 0; k < rule.nodes.size(); ++k) {
    Real x = mid + half * rule.nodes[k];
    total = total + f(x) * Complex(rule.weights[k], Real(0));
    ++evals;
  }
  return total * Complex(half, Real(0));
}

}  // namespace

QuadResult integrate(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                     const Real& abs_tol, std::vector<Real> split_points) {
  if (!(b > a)) throw DomainError("integrate: empty or inverted interval");
  if (!(abs_tol > 0)) throw DomainError("integrate: tolerance must be positive");

  const unsigned n1 = base_points(current_digits());
  const GLRule& coarse = gauss_legendre(n1);
  const GLRule& fine = gauss_legendre(2 * n1);

  std::vector<Real> bounds{a};
  std::sort(split_points.begin(), split_points.end());
  for (const Real& s : split_points)
    if (s > bounds.back() && s < b) bounds.push_back(s);
  bounds.push_back(b);

  struct Panel {
    Real a, b;
    unsigned depth;
  };
  std::deque<Panel> work;
  for (size_t i = 0; i + 1 < bounds.size(); ++i) work.push_back({bounds[i], bounds[i + 1], 0});

  const Real total_len = b - a;
  const Real tol_floor = abs_tol / 4096;
  QuadResult res{Complex(Real(0), Real(0)), Real(0), 0};
  unsigned long panels_done = 0;

  while (!work.empty()) {
    Panel p = work.front();
    work.pop_front();
    if (++panels_done > 200000) throw ConvergenceError("integrate: panel budget exhausted");

    Complex v1 = panel_sum(coarse, f, p.a, p.b, res.evals);
    Complex v2 = panel_sum(fine, f, p.a, p.b, res.evals);
    Real err = abs(v2 - v1);
    Real tol_panel = abs_tol * ((p.b - p.a) / total_len);
    if (tol_panel < tol_floor) tol_panel = tol_floor;

    if (err <= tol_panel || p.depth >= 60) {
      if (p.depth >= 60 && err > 100 * tol_panel)
        throw ConvergenceError("integrate: panel refinement stalled (nonintegrable feature?)");
      res.value = res.value + v2;
      res.err_estimate += err;
    } else {
      Real mid = (p.a + p.b) / 2;
      work.push_back({p.a, mid, p.depth + 1});
      work.push_back({mid, p.b, p.depth + 1});
    }
  }
  return res;
}

QuadResult integrate_halfline(const std::function<Complex(const Real&)>& f,
                              const HalflineEnvelope& env, const Real& rel_tol,
                              std::vector<Real> split_points) {
  if (!(env.decay_rate > 0)) throw DomainError("integrate_halfline: decay rate must be positive");
  if (!(rel_tol > 0)) throw DomainError("integrate_halfline: tolerance must be positive");
  const unsigned digits = current_digits();

  Real peak = env.power > 0 ? Real(env.power / env.decay_rate) : Real(0);
  Real ref = peak > 0 ? peak : Real(1) / env.decay_rate;

  // Truncation: drop the envelope by (digits + 8) decades relative to its peak.
  Real drop = Real(digits + 8) / log10_e();
  Real smax;
  if (env.power > 0) {
    Real s = peak + drop / env.decay_rate;
    for (int it = 0; it < 12; ++it) {
      Real h = -env.decay_rate * (s - peak) + env.power * log(s / peak) + drop;
      Real hp = -env.decay_rate + env.power / s;
      s -= h / hp;
    }
    smax = s;
  } else {
    smax = drop / env.decay_rate;
  }

  // Scale estimate from samples near the envelope peak plus any user splits.
  Real scale(0);
  auto consider = [&](const Real& s) {
    if (s > 0 && s < smax) {
      Real m = abs(f(s));
      if (m > scale) scale = m;
    }
  };
  consider(ref / 2);
  consider(ref);
  consider(3 * ref / 2);
  consider(3 * ref);
  for (const Real& s : split_points) consider(s);
  if (scale == 0) return {Complex(Real(0), Real(0)), Real(0), 4};

  Real width = sqrt(env.power + 1) / env.decay_rate;
  if (width < 1) width = Real(1);
  Real abs_tol = rel_tol * scale * width;

  // Endpoint regularization: on [0, s1] substitute s = s1 x^3 so a fractional
  // endpoint power s^alpha becomes x^{3 alpha + 2}, which adaptive bisection
  // resolves to full accuracy instead of stalling on the nonsmooth corner.
  Real s1 = ref / 8;
  for (const Real& s : split_points)
    if (s > 0 && s / 2 < s1) s1 = s / 2;
  if (s1 > smax / 4) s1 = smax / 4;
  auto head_f = [&](const Real& x) -> Complex {
    return f(s1 * x * x * x) * Complex(3 * s1 * x * x);
  };
  QuadResult head = integrate(head_f, Real(0), Real(1), abs_tol / 2);

  std::vector<Real> splits = std::move(split_points);
  for (int k = -3; k <= 2; ++k) {
    Real s = ref;
    for (int j = 0; j < (k < 0 ? -k : k); ++j) s = (k < 0) ? s / 2 : s * 2;
    splits.push_back(s);
  }
  QuadResult res = integrate(f, s1, smax, abs_tol / 2, std::move(splits));
  res.value += head.value;
  res.err_estimate += head.err_estimate;
  res.evals += head.evals + 4;
  res.err_estimate += rel_tol * scale * width / 100;  // truncated-tail allowance
  return res;
}

}  // namespace hyperstokes::quadrature
