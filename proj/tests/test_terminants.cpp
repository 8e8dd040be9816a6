#include "doctest.h"

#include <string>
#include <vector>

#include "hyperstokes/errors.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/quadrature.hpp"
#include "hyperstokes/surface.hpp"
#include "hyperstokes/terminants.hpp"
#include "support/testutil.hpp"

using namespace hyperstokes;
using testing::check_rel;

namespace {

SurfacePoint sig(int direction_sign) {
  return SurfacePoint(two_pi(), Rational(direction_sign, 2));
}

}  // namespace

TEST_SUITE_BEGIN("terminants");

TEST_CASE("one-level closed form reproduces frozen values on every sheet") {
  PrecisionScope guard(50);
  Real tol = eps_for(40);
  check_rel(terminants::F1(SurfacePoint(Real(3), Rational(1, 10)), Complex(Real(5)), sig(+1)),
            frozen::f1_a, tol, "interior of the principal window");
  check_rel(terminants::F1(SurfacePoint(Real(17) / 8, Rational(-1, 5)), Complex(Real(43) / 8),
                           sig(-1)),
            frozen::f1_b, tol, "lower singulant, fractional order");
  check_rel(terminants::F1(SurfacePoint(Real(5), Rational(49, 100)), Complex(Real(15) / 2),
                           sig(+1)),
            frozen::f1_nearcut, tol, "within 0.01 pi of the window edge");
  check_rel(terminants::F1(SurfacePoint(Real(5), Rational(1, 2)), Complex(Real(8)), sig(+1)),
            frozen::f1_cut_exact, tol, "on the window edge exactly");
  check_rel(terminants::F1(SurfacePoint(Real(3), Rational(23, 10)), Complex(Real(9) / 2),
                           sig(+1)),
            frozen::f1_sheet, tol, "one sheet beyond the window");
}

TEST_CASE("closed form vs direct ray quadrature (dual route)") {
  PrecisionScope guard(50);
  Real qtol = eps_for(36);
  Real tol = eps_for(30);
  struct Probe {
    Real mod;
    Rational arg;
    Complex order;
    int dir;
  };
  const std::vector<Probe> probes = {
      {Real(3), Rational(1, 10), Complex(Real(5)), +1},
      {Real(2), Rational(-3, 10), Complex(Real(13) / 4, Real(1) / 2), +1},
      {Real(7) / 2, Rational(1, 4), Complex(Real(6)), -1},
      {Real(3) / 2, Rational(0), Complex(Real(9) / 2), -1},
  };
  for (const Probe& p : probes) {
    SurfacePoint z(p.mod, p.arg);
    Complex closed = terminants::F1(z, p.order, sig(p.dir));
    Complex ray = terminants::F1_ray_quadrature(z, p.order, sig(p.dir), qtol);
    check_rel(closed, ray, tol, "dual route at " + z.describe());
  }
}

TEST_CASE("ray quadrature rejects arguments on or past the window edge") {
  PrecisionScope guard(50);
  CHECK_THROWS_AS(terminants::F1_ray_quadrature(SurfacePoint(Real(2), Rational(1, 2)),
                                                Complex(Real(4)), sig(+1), eps_for(20)),
                  DomainError);
}

TEST_CASE("rotation homogeneity for integer orders") {
  PrecisionScope guard(50);
  Real tol = eps_for(42);
  // F(z e^{+- i pi}; nu, sigma) = (-1)^{nu-1} F(z; nu, sigma e^{+- i pi})
  SurfacePoint z(Real(2), Rational(1, 5));
  Complex nu(Real(6));
  Complex up_lhs = terminants::F1(z.rotated(Rational(1)), nu, sig(+1));
  Complex up_rhs = -terminants::F1(z, nu, SurfacePoint(two_pi(), Rational(3, 2)));
  check_rel(up_lhs, up_rhs, tol, "upper rotation");
  Complex dn_lhs = terminants::F1(z.rotated(Rational(-1)), nu, sig(+1));
  Complex dn_rhs = -terminants::F1(z, nu, sig(-1));
  check_rel(dn_lhs, dn_rhs, tol, "lower rotation");
}

TEST_CASE("sheet-connection identity, explicit one-step form") {
  PrecisionScope guard(50);
  Real tol = eps_for(42);
  SurfacePoint hi(Real(3), Rational(23, 10));
  SurfacePoint lo = hi.rotated(Rational(-2));
  Complex order(Real(9) / 2);
  Complex two_pi_i(Real(0), two_pi());
  Complex sz = mul_i(two_pi() * hi.value());  // sigma z for sigma = 2 pi e^{i pi/2}
  Complex extra = two_pi_i * exp(sz) * hi.power(order - Real(1));
  Complex lhs = terminants::F1(hi, order, sig(+1));
  Complex rhs = terminants::F1(lo, order, sig(+1)) + extra;
  check_rel(lhs, rhs, tol, "one connection step");
}

TEST_CASE("connection residuals vanish just past the window edge") {
  PrecisionScope guard(50);
  // The helper requires arg(sigma_1 z) - pi in (0.02, 0.18): theta = 0.53 pi
  // puts the excess at 0.03 pi for an upward singulant.
  SurfacePoint z(Real(5) / 2, Rational(53, 100));

  terminants::TerminantSpec one = {{Complex(Real(5)), sig(+1)}};
  Complex r1 = terminants::connection_residual(z, one);
  CHECK(abs(r1) < eps_for(32));

  terminants::QuadOptions opts;
  opts.rel_tol = eps_for(30);
  terminants::TerminantSpec two = {{Complex(Real(5)), sig(+1)}, {Complex(Real(3)), sig(+1)}};
  Complex r2 = terminants::connection_residual(z, two, opts);
  CHECK(abs(r2) < eps_for(24));
}

TEST_CASE("order-shift recurrence residuals") {
  PrecisionScope guard(50);
  Real qtol = eps_for(28);
  Complex r1 = terminants::recurrence_shift_residual(SurfacePoint(Real(2), Rational(1, 7)),
                                                     Complex(Real(4)), sig(+1), 1, 1, qtol);
  CHECK(abs(r1) < eps_for(22));
  Complex r2 = terminants::recurrence_shift_residual(SurfacePoint(Real(2), Rational(1, 7)),
                                                     Complex(Real(4)), sig(+1), 2, 2, qtol);
  CHECK(abs(r2) < eps_for(20));
}

TEST_CASE("equal-singulant quadrature matches the frozen anchor and the Bell form") {
  PrecisionScope guard(50);
  terminants::QuadOptions opts;
  opts.rel_tol = eps_for(32);
  SurfacePoint z(Real(2), Rational(1, 5));
  terminants::TerminantSpec spec = {{Complex(Real(6)), sig(+1)}, {Complex(Real(6)), sig(+1)}};
  REQUIRE(terminants::has_coincident_rays(spec));

  terminants::FmResult quad = terminants::Fm_quadrature(z, spec, opts);
  check_rel(quad.value, frozen::f2_equal_anchor, eps_for(28), "frozen equal-singulant anchor");
  CHECK(quad.err_estimate < eps_for(26) * abs(quad.value));

  Complex bell = terminants::F_bell(z, Complex(Real(6)), sig(+1), 2);
  check_rel(quad.value, bell, eps_for(26), "exponential (Bell) identity, m = 2");
}

TEST_CASE("three-level equal-singulant dual route") {
  PrecisionScope guard(40);
  terminants::QuadOptions opts;
  opts.rel_tol = eps_for(14);
  SurfacePoint z(Real(2), Rational(1, 5));
  terminants::TerminantSpec spec = {{Complex(Real(4)), sig(+1)},
                                    {Complex(Real(4)), sig(+1)},
                                    {Complex(Real(4)), sig(+1)}};
  terminants::FmResult quad = terminants::Fm_quadrature(z, spec, opts);
  Complex bell = terminants::F_bell(z, Complex(Real(4)), sig(+1), 3);
  check_rel(quad.value, bell, eps_for(10), "exponential (Bell) identity, m = 3");
}

TEST_CASE("coincident-ray limit: Richardson extrapolation of rotated singulants") {
  PrecisionScope guard(50);
  SurfacePoint z(Real(2), Rational(1, 5));
  terminants::TerminantSpec spec = {{Complex(Real(6)), sig(+1)}, {Complex(Real(6)), sig(+1)}};

  terminants::QuadOptions stag;
  stag.rel_tol = eps_for(30);
  Complex exact = terminants::Fm_quadrature(z, spec, stag).value;

  terminants::QuadOptions lim;
  lim.rel_tol = eps_for(20);
  lim.mode = terminants::CoincidentMode::kEpsilonLimit;
  check_rel(terminants::Fm_quadrature(z, spec, lim).value, exact, eps_for(10),
            "rotation limit agrees with the staggered value");

  terminants::QuadOptions lim2 = lim;
  lim2.epsilon0 = Real(1) / 10;
  check_rel(terminants::Fm_quadrature(z, spec, lim2).value, exact, eps_for(10),
            "limit is independent of the starting rotation");
}

TEST_CASE("mixed-singulant reduction vs nested quadrature (dual route)") {
  PrecisionScope guard(50);
  Real qtol = eps_for(30);
  terminants::QuadOptions opts;
  opts.rel_tol = eps_for(30);
  SurfacePoint z(Real(2), Rational(1, 5));
  Complex a(Real(5));
  Complex b(Real(7) / 2);

  Complex red_minus = terminants::F2_mixed_reduced(z, a, sig(+1), b, -1, qtol);
  terminants::TerminantSpec down = {{a, sig(+1)}, {b, sig(-1)}};
  check_rel(red_minus, terminants::Fm_quadrature(z, down, opts).value, eps_for(24),
            "second singulant rotated down");

  Complex red_plus = terminants::F2_mixed_reduced(z, a, sig(+1), b, +1, qtol);
  terminants::TerminantSpec up = {{a, sig(+1)}, {b, SurfacePoint(two_pi(), Rational(3, 2))}};
  check_rel(red_plus, terminants::Fm_quadrature(z, up, opts).value, eps_for(24),
            "second singulant rotated up");
}

TEST_CASE("origin values match frozen integrals") {
  PrecisionScope guard(50);
  Real qtol = eps_for(36);
  terminants::TerminantSpec one = {{Complex(Real(25) / 4), sig(+1)}};
  check_rel(terminants::F_origin(one, qtol), frozen::f_origin_m1, eps_for(30), "one level");
  terminants::TerminantSpec two = {{Complex(Real(9) / 2), sig(+1)},
                                   {Complex(Real(13) / 4), sig(+1)}};
  check_rel(terminants::F_origin(two, qtol), frozen::f_origin_m2, eps_for(26), "two levels");
}

TEST_CASE("fully raw two-dimensional quadrature, no closed forms anywhere") {
  PrecisionScope guard(40);
  // Independent transcription of the nested two-level ray integral with both
  // integrals done by the generic engine (the production path replaces the
  // inner one by an incomplete-gamma closed form). Orders are integers so the
  // power factors are plain cubes and no branch bookkeeping is needed.
  SurfacePoint z(Real(3) / 2, Rational(1, 5));
  const Complex sv = sig(+1).value();  // 2 pi i
  const Real chi = Real(3) / 20;
  const Real eta1 = pi() / 2 - chi;  // outer ray, staggered below the inner
  const Real eta2 = pi() / 2;       // inner ray, canonical
  const Complex d1 = from_polar(Real(1), eta1);
  const Complex d2 = from_polar(Real(1), eta2);
  const Complex zv = z.value();
  const Real qtol = eps_for(18);

  auto inner = [&](const Complex& t1) {
    Real foot = abs(t1);
    quadrature::QuadResult r = quadrature::integrate_halfline(
        [&](const Real& s2) {
          Complex t2 = s2 * d2;
          return exp(sv * t2) * (t2 * t2 * t2) / (t1 - t2) * d2;
        },
        {two_pi(), Real(3)}, qtol, {foot / 2, foot, 2 * foot});
    return r.value;
  };

  Real delta = z.angle() - eta1;
  Real foot1 = z.modulus() * cos(delta);
  quadrature::QuadResult outer = quadrature::integrate_halfline(
      [&](const Real& s1) {
        Complex t1 = s1 * d1;
        return exp(sv * t1) * (t1 * t1 * t1) / (zv - t1) * inner(t1) * d1;
      },
      {two_pi() * cos(chi), Real(3)}, qtol, {foot1 / 2, foot1, 2 * foot1});

  terminants::QuadOptions opts;
  opts.rel_tol = eps_for(20);
  terminants::TerminantSpec spec = {{Complex(Real(4)), sig(+1)}, {Complex(Real(4)), sig(+1)}};
  check_rel(outer.value, terminants::Fm_quadrature(z, spec, opts).value, eps_for(12),
            "raw double integral vs production evaluator");
}

TEST_CASE("specification validation") {
  PrecisionScope guard(50);
  terminants::TerminantSpec empty;
  CHECK_THROWS_AS(terminants::validate(empty), DomainError);
  terminants::TerminantSpec shallow = {{Complex(Real(1) / 2), sig(+1)}};
  CHECK_THROWS_AS(terminants::validate(shallow), DomainError);

  terminants::TerminantSpec mixed = {{Complex(Real(5)), sig(+1)}, {Complex(Real(4)), sig(-1)}};
  CHECK_FALSE(terminants::has_coincident_rays(mixed));
  terminants::TerminantSpec wrapped = {{Complex(Real(5)), sig(+1)},
                                       {Complex(Real(4)), SurfacePoint(two_pi(), Rational(5, 2))}};
  CHECK(terminants::has_coincident_rays(wrapped));
}

TEST_SUITE_END();
