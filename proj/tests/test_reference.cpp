#include "doctest.h"

#include <string>
#include <vector>

#include "hyperstokes/coeffs.hpp"
#include "hyperstokes/errors.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/reference.hpp"
#include "hyperstokes/surface.hpp"
#include "support/spouge.hpp"
#include "support/testutil.hpp"

using namespace hyperstokes;
using testing::check_rel;

TEST_SUITE_BEGIN("reference");

TEST_CASE("exact special values at z = 1") {
  PrecisionScope guard(50);
  Real tol = eps_for(44);
  SurfacePoint one(Real(1), Rational(0));
  check_rel(reference::g(one), frozen::g_at_1, tol, "g(1)");
  check_rel(reference::gamma_star(one).value, frozen::gamma_star_at_1, tol, "Gamma*(1)");
  // closed form e / sqrt(2 pi), computed here rather than parsed
  check_rel(reference::gamma_star(one).value, Complex(exp(Real(1)) / sqrt(two_pi())), tol,
            "Gamma*(1) = e/sqrt(2 pi)");
}

TEST_CASE("frozen principal-sheet and deep-sheet values") {
  PrecisionScope guard(50);
  Real tol = eps_for(42);
  struct Spot {
    Real mod;
    Rational arg;
    const frozen::ComplexLiteral& want;
    const char* name;
  };
  const std::vector<Spot> spots = {
      {Real(5), Rational(1, 2), frozen::gamma_star_5_halfpi, "positive imaginary axis"},
      {Real(5), Rational(2, 5), frozen::gamma_star_5_2pi5, "first quadrant"},
      {Real(3), Rational(9, 10), frozen::gamma_star_3_9pi10, "near the negative axis"},
      {Real(21) / 4, Rational(13, 10), frozen::gamma_star_sheet_13pi10, "beyond principal"},
      {Real(21) / 4, Rational(-11, 5), frozen::gamma_star_sheet_m11pi5, "below principal"},
      {Real(21) / 8, Rational(47, 10), frozen::gamma_star_sheet_47pi10, "deep sheet"},
  };
  for (const Spot& s : spots) {
    reference::GammaStarValue got = reference::gamma_star(SurfacePoint(s.mod, s.arg));
    Real bound = tol;
    if (3 * got.est_rel_error > bound) bound = 3 * got.est_rel_error;
    check_rel(got.value, s.want, bound, s.name);
  }
  check_rel(reference::reciprocal_gamma_star(SurfacePoint(Real(5), Rational(1, 2))).value,
            frozen::recip_gamma_star_5_halfpi, tol, "reciprocal, imaginary axis");
  check_rel(reference::reciprocal_gamma_star(SurfacePoint(Real(5), Rational(2, 5))).value,
            frozen::recip_gamma_star_5_2pi5, tol, "reciprocal, first quadrant");
}

TEST_CASE("agreement with the structurally independent oracle") {
  PrecisionScope guard(50);
  Real tol = eps_for(40);
  const std::vector<std::pair<Real, Rational>> pts = {
      {Real(7) / 2, Rational(1, 5)},  {Real(9) / 4, Rational(-3, 5)},
      {Real(6), Rational(7, 10)},     {Real(13) / 8, Rational(-9, 10)},
      {Real(11) / 2, Rational(0)},
  };
  for (const auto& [mod, argq] : pts) {
    SurfacePoint z(mod, argq);
    check_rel(reference::gamma_star(z).value, testing::spouge_gamma_star(z), tol,
              "Gamma* vs partial-fraction oracle at " + z.describe());
  }
}

TEST_CASE("functional relation and monodromy") {
  PrecisionScope guard(50);
  Real tol = eps_for(42);

  // g(z) + g(z e^{-i pi}) + log(1 - e^{2 pi i z}) = 0 in the upper half
  SurfacePoint zu(Real(5), Rational(4, 5));
  Complex res_u = reference::g(zu) + reference::g(zu.rotated(Rational(-1))) +
                  log(Complex(Real(1)) - exp(mul_i(two_pi() * zu.value())));
  CHECK(abs(res_u) < tol);

  // mirrored identity in the lower half
  SurfacePoint zl(Real(5), Rational(-4, 5));
  Complex res_l = reference::g(zl) + reference::g(zl.rotated(Rational(1))) +
                  log(Complex(Real(1)) - exp(mul_minus_i(two_pi() * zl.value())));
  CHECK(abs(res_l) < tol);

  // Gamma*(z e^{2 pi i}) = -e^{-2 pi i z} Gamma*(z)
  SurfacePoint z(Real(21) / 4, Rational(3, 10));
  Complex lhs = reference::gamma_star(z.rotated(Rational(2))).value;
  Complex rhs = -exp(mul_minus_i(two_pi() * z.value())) * reference::gamma_star(z).value;
  check_rel(lhs, rhs, tol, "monodromy");
}

TEST_CASE("poles are diagnosed") {
  PrecisionScope guard(50);
  CHECK_THROWS_AS(reference::gamma_star(SurfacePoint(Real(3), Rational(1))), PoleError);
  CHECK_THROWS_AS(reference::g(SurfacePoint(Real(7), Rational(-3))), PoleError);
}

TEST_CASE("partial sums follow the coefficient tables") {
  PrecisionScope guard(50);
  Real tol = eps_for(46);
  SurfacePoint z(Real(4), Rational(1, 5));
  Complex zinv = Complex(Real(1)) / z.value();
  Complex plain(Real(0));
  Complex recip(Real(0));
  Complex p(Real(1));
  for (unsigned n = 0; n < 6; ++n) {
    plain += to_real(coeffs::gamma_star_coeff(n)) * p;
    recip += to_real(coeffs::stirling_gamma(n)) * p;
    p *= zinv;
  }
  check_rel(reference::partial_sum(z, 6), plain, tol, "plain partial sum");
  check_rel(reference::partial_sum_reciprocal(z, 6), recip, tol, "reciprocal partial sum");
  CHECK(reference::partial_sum(z, 0).is_zero());
}

TEST_CASE("level-0 remainders against frozen values") {
  PrecisionScope guard(50);
  SurfacePoint z(Real(2), Rational(2, 5));
  reference::RemainderReport plain = reference::remainder_level0(z, 37);
  reference::RemainderReport recip = reference::remainder_level0_reciprocal(z, 37);
  check_rel(plain.remainder, frozen::r_n_small, eps_for(25), "R_N small chain");
  check_rel(recip.remainder, frozen::rt_n_small, eps_for(25), "reciprocal R_N small chain");
  // |R_37| is about a third of the oracle here, so barely any cancellation.
  CHECK(plain.digits_lost <= 1);
  // The subtraction runs at elevated precision before rounding, so the
  // reconstruction from the rounded fields holds to working accuracy only.
  CHECK(abs(plain.remainder - (plain.oracle - plain.partial)) <=
        eps_for(45) * abs(plain.remainder));
  CHECK(plain.est_rel_error < eps_for(20));

  SurfacePoint big(Real(5), Rational(1, 2));
  reference::RemainderReport plain_big = reference::remainder_level0(big, 62);
  check_rel(plain_big.remainder, frozen::r_n_5_halfpi, eps_for(25), "R_N at the imaginary axis");
  check_rel(reference::remainder_level0_reciprocal(big, 62).remainder, frozen::rt_n_5_halfpi,
            eps_for(25), "reciprocal R_N at the imaginary axis");
  // Near-optimal truncation at |z| = 5: the remainder is ~1e-13 of the
  // oracle, which the report must surface as lost digits.
  CHECK(plain_big.digits_lost >= 8);
}

TEST_CASE("catastrophic cancellation is reported, not returned") {
  PrecisionScope guard(30);
  // optimally truncated: |R_N| ~ e^{-2 pi * 8} ~ 1e-22 against an O(1)
  // oracle leaves fewer than 10 of the 30 digits
  SurfacePoint z(Real(8), Rational(1, 2));
  CHECK_THROWS_AS(reference::remainder_level0(z, 50), PrecisionError);
}

TEST_SUITE_END();
