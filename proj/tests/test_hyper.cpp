#include "doctest.h"

#include <vector>

#include "hyperstokes/errors.hpp"
#include "hyperstokes/hyper.hpp"
#include "hyperstokes/numbers.hpp"
#include "hyperstokes/reference.hpp"
#include "hyperstokes/surface.hpp"
#include "support/testutil.hpp"

using namespace hyperstokes;
using testing::check_rel;
using testing::lit;
using testing::rel_diff;

TEST_SUITE_BEGIN("hyper");

TEST_CASE("truncation schedule steps down by floor(2 pi |z|)") {
  PrecisionScope guard(50);
  hyper::TruncationScheme s0 = hyper::optimal_scheme(Real(5), 0);
  CHECK(s0.level == 0);
  CHECK(s0.big_n == 31);
  CHECK(s0.big_m == 0);
  hyper::TruncationScheme s1 = hyper::optimal_scheme(Real(5), 1);
  CHECK(s1.big_n == 62);
  CHECK(s1.big_m == 31);
  hyper::TruncationScheme s2 = hyper::optimal_scheme(Real(5), 2);
  CHECK(s2.level == 2);
  CHECK(s2.big_n == 94);
  CHECK(s2.big_m == 62);
  CHECK(s2.big_k == 31);
  hyper::TruncationScheme t2 = hyper::optimal_scheme(Real(2), 2);
  CHECK(t2.big_n == 37);
  CHECK(t2.big_m == 25);
  CHECK(t2.big_k == 12);
}

TEST_CASE("working-precision schedule grows with level and covers cancellation") {
  unsigned d0 = hyper::scheduled_digits(Real(5), 0);
  unsigned d1 = hyper::scheduled_digits(Real(5), 1);
  unsigned d2 = hyper::scheduled_digits(Real(5), 2);
  CHECK(d0 >= kDefaultDigits);
  CHECK(d1 > d0);
  CHECK(d2 > d1);
  // Level-1 extraction at |z| = 5 cancels about 4 pi 5 log10(e) ~ 28 digits;
  // the schedule must leave a healthy margin beyond that.
  CHECK(d1 >= 48);
  CHECK_THROWS_AS(hyper::scheduled_digits(Real(0), 1), DomainError);
}

TEST_CASE("one-stage term group matches frozen values on the Stokes line") {
  PrecisionScope guard(60);
  SurfacePoint z(Real(5), Rational(1, 2));
  hyper::LevelPair t1 = hyper::level1_terms(z, 62, 31);
  check_rel(t1.plain, frozen::t1_5_halfpi, eps_for(30), "plain one-stage sum");
  check_rel(t1.reciprocal, frozen::t1t_5_halfpi, eps_for(30), "reciprocal one-stage sum");

  hyper::LevelPair zero = hyper::level1_terms(z, 62, 0);
  CHECK(abs(zero.plain) == 0);
  CHECK(abs(zero.reciprocal) == 0);
  CHECK_THROWS_AS(hyper::level1_terms(z, 31, 31), ConfigError);
}

TEST_CASE("one-stage remainder matches the frozen subtraction chain") {
  PrecisionScope guard(60);
  SurfacePoint z(Real(2), Rational(2, 5));
  reference::RemainderReport r = hyper::remainder_level1(z, 37, 25);
  check_rel(r.remainder, frozen::r_nm_small, eps_for(30), "plain level-1 remainder");
  CHECK(r.digits_lost > 0);
  reference::RemainderReport rt = hyper::remainder_level1_reciprocal(z, 37, 25);
  check_rel(rt.remainder, frozen::rt_nm_small, eps_for(30), "reciprocal level-1 remainder");
}

TEST_CASE("two-stage term group matches frozen values") {
  PrecisionScope guard(55);
  SurfacePoint z(Real(2), Rational(2, 5));
  hyper::LevelPair t2 = hyper::level2_terms(z, 37, 25, 12);
  check_rel(t2.plain, frozen::t2_small, eps_for(28), "plain two-stage sum");
  check_rel(t2.reciprocal, frozen::t2t_small, eps_for(28), "reciprocal two-stage sum");
  CHECK_THROWS_AS(hyper::level2_terms(z, 37, 25, 25), ConfigError);
}

TEST_CASE("two-stage remainder matches the frozen subtraction chain") {
  PrecisionScope guard(70);
  SurfacePoint z(Real(2), Rational(2, 5));
  reference::RemainderReport r = hyper::remainder_level2(z, 37, 25, 12);
  check_rel(r.remainder, frozen::r_nmk_small, eps_for(34), "plain level-2 remainder");
  reference::RemainderReport rt = hyper::remainder_level2_reciprocal(z, 37, 25, 12);
  check_rel(rt.remainder, frozen::rt_nmk_small, eps_for(34), "reciprocal level-2 remainder");
}

TEST_CASE("each stage shrinks the frozen remainders by the advertised factors") {
  Real r_n = abs(lit(frozen::r_n_small));
  Real r_nm = abs(lit(frozen::r_nm_small));
  Real r_nmk = abs(lit(frozen::r_nmk_small));
  CHECK(r_n > 1000 * r_nm);
  CHECK(r_nm > 1000 * 1000 * r_nmk);
  Real rt_n = abs(lit(frozen::rt_n_small));
  Real rt_nm = abs(lit(frozen::rt_nm_small));
  Real rt_nmk = abs(lit(frozen::rt_nmk_small));
  CHECK(rt_n > 1000 * rt_nm);
  CHECK(rt_nm > 1000 * 1000 * rt_nmk);
}

TEST_CASE("contour quadrature reproduces the subtraction remainder (dual route)") {
  PrecisionScope guard(60);
  SurfacePoint z(Real(5), Rational(9, 20));
  Real qtol = eps_for(8);

  Complex quad = hyper::remainder_level1_quadrature(z, 62, 31, false, qtol);
  reference::RemainderReport sub = hyper::remainder_level1(z, 62, 31);
  CHECK(rel_diff(quad, sub.remainder) < eps_for(5));

  Complex quad_t = hyper::remainder_level1_quadrature(z, 62, 31, true, qtol);
  reference::RemainderReport sub_t = hyper::remainder_level1_reciprocal(z, 62, 31);
  CHECK(rel_diff(quad_t, sub_t.remainder) < eps_for(5));

  CHECK_THROWS_AS(
      hyper::remainder_level1_quadrature(SurfacePoint(Real(5), Rational(49, 100)), 62, 31, false,
                                         qtol),
      DomainError);
}

TEST_CASE("exact pi-multiple grids") {
  std::vector<Rational> g = hyper::pi_multiple_grid(Rational(3, 10), Rational(7, 10),
                                                    Rational(1, 200));
  REQUIRE(g.size() == 81);
  CHECK(g.front() == Rational(3, 10));
  CHECK(g.back() == Rational(7, 10));
  CHECK(g[40] == Rational(1, 2));
  std::vector<Rational> h = hyper::pi_multiple_grid(Rational(0), Rational(1, 3), Rational(1, 4));
  REQUIRE(h.size() == 2);
  CHECK(h[1] == Rational(1, 4));
}

TEST_CASE("second-stage multiplier samples match frozen curve points") {
  std::vector<Rational> grid = {Rational(1, 2), Rational(7, 10)};
  std::vector<hyper::MultiplierSample> plain =
      hyper::stokes_multiplier_curve(Real(5), hyper::MultiplierKind::kPlain, grid);
  REQUIRE(plain.size() == 2);
  CHECK(plain[0].theta_pi == Rational(1, 2));
  CHECK(plain[0].big_n == 62);
  CHECK(plain[0].big_m == 31);
  CHECK(plain[0].digits_used >= 48);
  check_rel(plain[0].s, frozen::s2_halfpi, eps_for(20), "plain multiplier on the line");
  check_rel(plain[1].s, frozen::s2_7pi10, eps_for(20), "plain multiplier past the line");

  std::vector<hyper::MultiplierSample> recip = hyper::stokes_multiplier_curve(
      Real(5), hyper::MultiplierKind::kReciprocal, {Rational(1, 2)});
  REQUIRE(recip.size() == 1);
  check_rel(recip[0].s, frozen::s2t_halfpi, eps_for(20), "reciprocal multiplier on the line");
}

TEST_CASE("piecewise multipliers the smooth curves interpolate") {
  hyper::DiscontinuousPair below = hyper::discontinuous_multipliers(2, Rational(1, 4));
  CHECK(below.s == Rational(0));
  CHECK(below.s_tilde == Rational(0));
  hyper::DiscontinuousPair line = hyper::discontinuous_multipliers(2, Rational(1, 2));
  CHECK(line.s == Rational(3, 8));
  CHECK(line.s_tilde == Rational(1, 8));
  hyper::DiscontinuousPair above = hyper::discontinuous_multipliers(2, Rational(3, 4));
  CHECK(above.s == Rational(1));
  CHECK(above.s_tilde == Rational(0));

  hyper::DiscontinuousPair line3 = hyper::discontinuous_multipliers(3, Rational(-1, 2));
  CHECK(line3.s == Rational(5, 16));
  CHECK(line3.s_tilde == Rational(1, 16));
  hyper::DiscontinuousPair first = hyper::discontinuous_multipliers(1, Rational(3, 5));
  CHECK(first.s == Rational(1));
  CHECK(first.s_tilde == Rational(1));

  CHECK_THROWS_AS(hyper::discontinuous_multipliers(0, Rational(1, 2)), ConfigError);
  CHECK_THROWS_AS(hyper::discontinuous_multipliers(2, Rational(1)), DomainError);
}

TEST_SUITE_END();
