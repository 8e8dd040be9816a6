#include "hyperstokes/terminants.hpp"

#include <algorithm>
#include <cmath>

#include "hyperstokes/coeffs.hpp"
#include "hyperstokes/errors.hpp"
#include "hyperstokes/incgamma.hpp"
#include "hyperstokes/quadrature.hpp"

namespace hyperstokes::terminants {

namespace {

struct EvalCtx {
  Real rel_tol;
};

struct EvalOut {
  Complex v;
  Real err;
};

Real resolve_rel_tol(const Real& requested) {
  if (requested > 0) return requested;
  unsigned d = current_digits();
  return eps_for(d > 12 ? d - 12 : 18);
}

Complex two_pi_i() { return Complex(Real(0), two_pi()); }

// Wrap a surface-angle difference into (-pi, pi] (value-plane direction).
Real wrap_angle(const Real& x) {
  Real y = fmod(x, two_pi());
  if (y > pi()) y -= two_pi();
  if (y <= -pi()) y += two_pi();
  return y;
}

EvalOut fm_eval(const SurfacePoint& z, const TerminantSpec& spec, std::size_t idx,
                const EvalCtx& ctx);

// Closed form of the one-level terminant for |arg(sigma z)| <= pi:
//   e^{i pi N} e^{sigma z} z^{N-1} Gamma(N) Gamma(1-N, sigma z).
EvalOut f1_window(const SurfacePoint& z, const Complex& order, const SurfacePoint& sigma) {
  SurfacePoint w = surface_mul(sigma, z);
  Complex v = exp(mul_i(order) * pi()) * exp(w.value()) * z.power(order - Real(1)) *
              incgamma::gamma(order) * incgamma::upper(Real(1) - order, w);
  return {v, abs(v) * eps_for(current_digits() - 4)};
}

// Whole-turn shift that places the surface angle pi*pi_mult + offset into
// the window (-pi, pi]. The boundary case (angle exactly pi, which arises
// whenever coincident singulants meet the canonical ray) is decided in exact
// rational arithmetic so rounding cannot flip the sheet.
long window_embedding_turns(const Rational& pi_mult, const Real& offset) {
  if (offset.is_zero()) {
    Rational q = (Rational(1) - pi_mult) / 2;
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer fl;
    if (n >= 0) {
      fl = n / d;
    } else {
      fl = Integer(-((-n + d - 1) / d));
    }
    return fl.convert_to<long>();
  }
  Real k = floor((pi() - (pi() * to_real(pi_mult) + offset)) / two_pi());
  return k.convert_to<long>();
}

// Contour evaluation of the level at `idx` with the deeper levels as the
// inner function, along the ray at eta = pi - arg(sigma_1) - chi with
// chi in (0, 1/2].
//
// Two geometric rules make this correct on every sheet that arises:
//
//  * Inner embedding: the inner function (levels idx+1 and deeper) is
//    single-valued off its own canonical ray, and the defining nested
//    integral pins it to the sheet where arg(sigma_2 t) lies in (-pi, pi].
//    Any other sheet differs by a connection term ~ e^{sigma_2 t}, which
//    grows exactly as fast as the outer factor decays when the singulant
//    directions differ by pi -- the integral would diverge. The ray's
//    surface angle is therefore shifted by whole turns before the inner
//    evaluation.
//
//  * Pole crossing: when the pole direction arg(z) is too close to (or
//    beyond) the window edge, the ray is rotated *down* past it and the
//    crossing is compensated by the explicit residue
//    2 pi i e^{sigma_1 z} z^{N_1-1} F^{(m-1)}(z; tail), with the tail taken
//    on the branch continued from the contour to the pole.
EvalOut fm_contour(const SurfacePoint& z, const TerminantSpec& spec, std::size_t idx,
                   const EvalCtx& ctx) {
  const TerminantLevel& lvl = spec[idx];
  const SurfacePoint& sig = lvl.singulant;
  SurfacePoint w = surface_mul(sig, z);
  Real margin_hi = pi() - w.angle();  // angle from the pole up to the edge
  if (margin_hi < -(Real(1) / 4))
    throw DomainError("terminant contour: point too far beyond the edge");

  Real chi = Real(3) / 20;
  bool pole_crossed = false;
  if (margin_hi <= chi + Real(1) / 5) {
    chi = margin_hi + Real(3) / 10;
    if (chi > Real(1) / 2) chi = Real(1) / 2;
    pole_crossed = true;
  }

  Rational ray_pi_mult = Rational(1) - sig.pi_multiple();
  Real ray_offset = -sig.offset() - chi;
  Real eta = SurfacePoint(Real(1), ray_pi_mult, ray_offset).angle();
  Complex dir = from_polar(Real(1), eta);
  Complex zv = z.value();
  Complex sv = sig.value();

  Rational inner_pi_mult = ray_pi_mult;
  if (idx + 1 < spec.size()) {
    const SurfacePoint& sig2 = spec[idx + 1].singulant;
    long k = window_embedding_turns(sig2.pi_multiple() + ray_pi_mult, sig2.offset() + ray_offset);
    inner_pi_mult += Rational(2 * k);
  }

  auto f = [&](const Real& s) -> Complex {
    SurfacePoint t(s, ray_pi_mult, ray_offset);
    Complex inner = fm_eval(SurfacePoint(s, inner_pi_mult, ray_offset), spec, idx + 1, ctx).v;
    return exp(sv * t.value()) * t.power(lvl.order - Real(1)) * inner / (zv - t.value()) * dir;
  };

  quadrature::HalflineEnvelope env;
  env.decay_rate = sig.modulus() * cos(chi);
  env.power = lvl.order.re - 1;

  std::vector<Real> splits;
  Real delta = wrap_angle(z.angle() - eta);
  if (abs(delta) < pi() / 2) {
    Real foot = z.modulus() * cos(delta);
    splits = {foot / 2, foot, 2 * foot};
  }

  quadrature::QuadResult qr = quadrature::integrate_halfline(f, env, ctx.rel_tol, splits);
  EvalOut out{qr.value, 3 * qr.err_estimate + abs(qr.value) * eps_for(current_digits() - 2)};

  if (pole_crossed) {
    // Residue branch continued from the contour to the pole: express the pole
    // in the contour's angular coordinates (delta above the ray, within the
    // narrow wedge swept by the rotation, so no extra turn can appear).
    Real delta_pole = z.angle() - eta;
    EvalOut tail =
        fm_eval(SurfacePoint(z.modulus(), inner_pi_mult, ray_offset + delta_pole), spec, idx + 1,
                ctx);
    Complex coef = two_pi_i() * exp(w.value()) * z.power(lvl.order - Real(1));
    out.v += coef * tail.v;
    out.err += abs(coef) * tail.err + abs(coef * tail.v) * eps_for(current_digits() - 2);
  }
  return out;
}

// F at the surface point z with sheet reduction: repeated application of
//   F^(m)(z) = F^(m)(z e^{-2 pi i}) + 2 pi i e^{sigma_1 z} z^{N_1-1}
//                                       * F^(m-1)(z; tail)
// (and its inverse) until arg(sigma_1 z) lands in (-pi, pi].
EvalOut fm_eval(const SurfacePoint& z, const TerminantSpec& spec, std::size_t idx,
                const EvalCtx& ctx) {
  const std::size_t m_here = spec.size() - idx;
  if (m_here == 0) return {Complex(Real(1)), Real(0)};
  const TerminantLevel& lvl = spec[idx];

  Complex corr_total;
  Real err_total(0);
  SurfacePoint zz = z;
  for (int guard = 0;; ++guard) {
    if (guard > 1000) throw BranchError("terminant sheet reduction did not terminate");
    SurfacePoint w = surface_mul(lvl.singulant, zz);
    if (w.compare_angle(Rational(1)) > 0) {
      EvalOut tail = fm_eval(zz, spec, idx + 1, ctx);
      Complex coef = two_pi_i() * exp(w.value()) * zz.power(lvl.order - Real(1));
      corr_total += coef * tail.v;
      err_total += abs(coef) * tail.err;
      zz = zz.rotated(Rational(-2));
    } else if (w.compare_angle(Rational(-1)) <= 0) {
      SurfacePoint zu = zz.rotated(Rational(2));
      EvalOut tail = fm_eval(zu, spec, idx + 1, ctx);
      Complex coef = two_pi_i() * exp(w.value()) * zu.power(lvl.order - Real(1));
      corr_total -= coef * tail.v;
      err_total += abs(coef) * tail.err;
      zz = zu;
    } else {
      break;
    }
  }
  EvalOut core =
      m_here == 1 ? f1_window(zz, lvl.order, lvl.singulant) : fm_contour(zz, spec, idx, ctx);
  return {core.v + corr_total, core.err + err_total};
}

TerminantSpec rotated_spec(const TerminantSpec& spec, const Real& eps) {
  TerminantSpec out = spec;
  const std::size_t m = spec.size();
  for (std::size_t k = 0; k < m; ++k) {
    unsigned long steps = m - 1 - k;  // outermost rotated the most, innermost fixed
    if (steps > 0) out[k].singulant = spec[k].singulant.rotated_radians(eps * Real(steps));
  }
  return out;
}

}  // namespace

void validate(const TerminantSpec& spec) {
  if (spec.empty()) throw DomainError("terminant spec must have at least one level");
  for (const TerminantLevel& lvl : spec) {
    if (!(lvl.order.re > 1))
      throw DomainError("terminant level requires Re(order) > 1, got " + to_string(lvl.order));
  }
}

bool has_coincident_rays(const TerminantSpec& spec) {
  for (std::size_t k = 0; k + 1 < spec.size(); ++k) {
    const SurfacePoint& a = spec[k].singulant;
    const SurfacePoint& b = spec[k + 1].singulant;
    if (a.offset() != b.offset()) continue;  // irrational parts must match exactly
    Rational d = (a.pi_multiple() - b.pi_multiple()) / 2;
    if (denominator(d) == 1) return true;
  }
  return false;
}

Complex F1(const SurfacePoint& z, const Complex& order, const SurfacePoint& singulant) {
  TerminantSpec spec{{order, singulant}};
  validate(spec);
  EvalCtx ctx{resolve_rel_tol(Real(0))};
  return fm_eval(z, spec, 0, ctx).v;
}

Complex F1_ray_quadrature(const SurfacePoint& z, const Complex& order,
                          const SurfacePoint& singulant, const Real& rel_tol) {
  TerminantSpec spec{{order, singulant}};
  validate(spec);
  SurfacePoint w = surface_mul(singulant, z);
  if (w.compare_angle(Rational(1)) >= 0 || w.compare_angle(Rational(-1)) <= 0)
    throw DomainError("F1_ray_quadrature requires |arg(sigma z)| < pi strictly");
  EvalCtx ctx{resolve_rel_tol(rel_tol)};
  // One-level contour: the integrand is the defining ray integral itself
  // (the inner function degenerates to 1), so this shares no code with the
  // incomplete-gamma closed form it cross-checks.
  return fm_contour(z, spec, 0, ctx).v;
}

FmResult Fm_quadrature(const SurfacePoint& z, const TerminantSpec& spec, const QuadOptions& opts) {
  validate(spec);
  EvalCtx ctx{resolve_rel_tol(opts.rel_tol)};
  if (opts.mode == CoincidentMode::kStaggeredExact || spec.size() == 1 ||
      !has_coincident_rays(spec)) {
    EvalOut out = fm_eval(z, spec, 0, ctx);
    return {out.v, out.err};
  }

  // Defining limit: singulants rotated apart by multiples of eps, then
  // Richardson extrapolation in eps (error analytic in eps, so halving steps
  // eliminate successive powers).
  Real eps0 = opts.epsilon0 > 0 ? opts.epsilon0 : Real(3) / 20;
  SurfacePoint w1 = surface_mul(spec.front().singulant, z);
  Real room = (pi() - w1.angle()) - Real(1) / 10;
  if (room > 0 && eps0 * Real(static_cast<long>(spec.size() - 1)) > room)
    eps0 = room / Real(static_cast<long>(spec.size() - 1));
  if (!(eps0 > Real(1) / 1000))
    throw DomainError("epsilon-limit mode: no angular room for the rotations");

  constexpr int kMaxLevels = 6;
  std::vector<Complex> table;  // last Richardson row
  Complex prev_diag;
  Real err(0);
  for (int j = 0; j < kMaxLevels; ++j) {
    Real eps = eps0 / Real(1L << j);
    EvalOut out = fm_eval(z, rotated_spec(spec, eps), 0, ctx);
    err += out.err;
    std::vector<Complex> row(j + 1);
    row[0] = out.v;
    for (int i = 1; i <= j; ++i) {
      Real denom = pow(Real(2), i) - 1;
      row[i] = row[i - 1] + (row[i - 1] - table[i - 1]) / denom;
    }
    Complex diag = row.back();
    if (j > 0) {
      Real change = abs(diag - prev_diag);
      if (change < ctx.rel_tol * abs(diag) * 30 || j == kMaxLevels - 1) {
        return {diag, err + change};
      }
    }
    prev_diag = diag;
    table = std::move(row);
  }
  throw ConvergenceError("epsilon-limit extrapolation did not stabilize");
}

Complex F_bell(const SurfacePoint& z, const Complex& order, const SurfacePoint& singulant,
               unsigned levels) {
  if (levels == 0) return Complex(Real(1));
  validate(TerminantSpec{{order, singulant}});
  std::vector<Complex> y(levels);
  Complex p(Real(1));  // (2 pi i)^{k-1}
  for (unsigned k = 1; k <= levels; ++k) {
    Complex ko = Complex(Real(k)) * (order - Real(1)) + Real(1);
    y[k - 1] = p * F1(z, ko, singulant.scaled(Real(k))) / Real(k);
    p = p * two_pi_i();
  }
  return coeffs::bell_complete_sequence(y)[levels];
}

Complex F2_mixed_reduced(const SurfacePoint& z, const Complex& order1, const SurfacePoint& sigma1,
                         const Complex& order2, int second_direction_sign, const Real& rel_tol) {
  TerminantSpec probe{{order1, sigma1}, {order2, sigma1}};
  validate(probe);
  SurfacePoint w = surface_mul(sigma1, z);
  if (w.compare_angle(Rational(1)) > 0 || w.compare_angle(Rational(-1)) < 0)
    throw DomainError("F2_mixed_reduced requires |arg(sigma z)| <= pi");
  const Real rel = resolve_rel_tol(rel_tol);
  const Complex inner_order = order1 + order2 - Real(1);
  const Complex pow_u = order2 - Real(1);
  const Complex pow_1pu = Real(1) - order1 - order2;

  auto h = [&](const Real& u) -> Complex {
    Complex uu = exp(pow_u * Complex(log(u)));
    Complex vv = exp(pow_1pu * Complex(log(Real(1) + u)));
    return uu * vv * F1(z.scaled(Real(1) + u), inner_order, sigma1);
  };

  // Scale and truncation: the integrand decays algebraically like u^{-Re A - 1}.
  Real scale(0);
  for (int i = -1; i <= 1; ++i) {
    Real m = abs(h(pow(Real(2), i)));
    if (m > scale) scale = m;
  }
  if (scale.is_zero()) return Complex();
  const unsigned digits = current_digits();
  double rea = order1.re.convert_to<double>();
  Real umax = pow(Real(10), static_cast<int>((digits + 12) / rea) + 1);
  if (umax < 64) umax = Real(64);
  for (int tries = 0; tries < 80; ++tries) {
    if (abs(h(umax)) * umax < rel * scale / 4) break;
    umax *= 4;
  }

  Real abs_tol = rel * scale;
  Real s1 = Real(1) / 4;
  auto g = [&](const Real& x) -> Complex {
    Real u = s1 * x * x * x;
    return h(u) * Complex(3 * s1 * x * x);
  };
  quadrature::QuadResult head = quadrature::integrate(g, Real(0), Real(1), abs_tol / 2);
  std::vector<Real> splits;
  for (Real sp = Real(1); sp < umax; sp *= 4) splits.push_back(sp);
  quadrature::QuadResult body = quadrature::integrate(h, s1, umax, abs_tol / 2, splits);

  Complex integral = head.value + body.value;
  Complex result = exp(mul_i(order2) * pi()) * integral;
  if (second_direction_sign > 0)
    result = result * exp(mul_minus_i(order2 - Real(1)) * two_pi());
  return result;
}

Complex F_origin(const TerminantSpec& spec, const Real& rel_tol) {
  validate(spec);
  const Complex n1 = spec.front().order;
  const SurfacePoint& sig = spec.front().singulant;
  if (!(n1.re > 2)) throw DomainError("F_origin requires Re(order_1) > 2");
  Complex prefac = exp(mul_i(n1) * pi()) * sig.power(Real(1) - n1);
  if (spec.size() == 1) return prefac * incgamma::gamma(n1 - Real(1));

  EvalCtx ctx{resolve_rel_tol(rel_tol)};
  Rational ray_pi_mult = Rational(1) - sig.pi_multiple();
  Real ray_offset = -sig.offset();
  // Inner levels pinned to their principal embedding, as in the contour
  // evaluator (the canonical ray sits exactly on the inner window edge when
  // the singulants coincide, and a whole turn off it when they oppose).
  Rational inner_pi_mult =
      ray_pi_mult + Rational(2 * window_embedding_turns(
                                     spec[1].singulant.pi_multiple() + ray_pi_mult,
                                     spec[1].singulant.offset() + ray_offset));
  const Complex pow_u = n1 - Real(2);
  auto f = [&](const Real& u) -> Complex {
    SurfacePoint t(u / sig.modulus(), inner_pi_mult, ray_offset);
    return exp(Complex(-u)) * exp(pow_u * Complex(log(u))) * fm_eval(t, spec, 1, ctx).v;
  };
  quadrature::HalflineEnvelope env;
  env.decay_rate = Real(1);
  env.power = n1.re - 2;
  quadrature::QuadResult qr = quadrature::integrate_halfline(f, env, ctx.rel_tol, {});
  return prefac * qr.value;
}

Complex connection_residual(const SurfacePoint& z, const TerminantSpec& spec,
                            const QuadOptions& opts) {
  validate(spec);
  EvalCtx ctx{resolve_rel_tol(opts.rel_tol)};
  SurfacePoint w = surface_mul(spec.front().singulant, z);
  Real excess = w.angle() - pi();  // how far beyond the window edge z sits
  if (!(excess > Real(1) / 50) || !(excess < Real(9) / 50))
    throw DomainError(
        "connection_residual expects arg(sigma_1 z) - pi in (0.02, 0.18): both sides are then "
        "reachable by direct contours");

  // Upper-sheet value by direct contour (ray rotated above the pole), without
  // invoking the connection identity being tested.
  EvalOut up = fm_contour(z, spec, 0, ctx);
  // Lower-sheet value, in-window, also a direct contour.
  EvalOut down = fm_eval(z.rotated(Rational(-2)), spec, 0, ctx);
  EvalOut tail = fm_eval(z, spec, 1, ctx);
  Complex corr = two_pi_i() * exp(w.value()) * z.power(spec.front().order - Real(1)) * tail.v;

  Complex resid = down.v - up.v + corr;
  Real scale = std::max({abs(down.v), abs(up.v), abs(corr)});
  if (scale.is_zero()) return Complex();
  return resid / scale;
}

Complex recurrence_shift_residual(const SurfacePoint& z, const Complex& order,
                                  const SurfacePoint& singulant, unsigned levels, unsigned shift,
                                  const Real& rel_tol) {
  if (levels == 0) throw DomainError("recurrence_shift_residual: need at least one level");
  if (shift == 0) throw DomainError("recurrence_shift_residual: shift must be positive");
  const Complex last = order - Real(static_cast<long>(shift));
  if (!(last.re > 1))
    throw DomainError("recurrence_shift_residual: Re(order - shift) must exceed 1");
  QuadOptions opts;
  opts.rel_tol = rel_tol;

  TerminantSpec spec_l(levels, TerminantLevel{order, singulant});
  spec_l.back().order = last;
  TerminantSpec spec_r = spec_l;
  spec_r.back().order = last + Real(1);

  Complex lhs = z.value() * Fm_quadrature(z, spec_l, opts).value;
  Complex rhs = Fm_quadrature(z, spec_r, opts).value;
  Real scale = std::max(abs(lhs), abs(rhs));
  for (unsigned k = 0; k < levels; ++k) {
    Complex fk = F_bell(z, order, singulant, k);
    TerminantSpec spec_o(levels - k, TerminantLevel{order, singulant});
    spec_o.back().order = last;
    spec_o.front().order = spec_o.front().order + Real(1);
    Complex ok = F_origin(spec_o, resolve_rel_tol(rel_tol));
    Complex term = fk * ok;
    rhs -= term;
    scale = std::max(scale, abs(term));
  }
  if (scale.is_zero()) return Complex();
  return (lhs - rhs) / scale;
}

}  // namespace hyperstokes::terminants
