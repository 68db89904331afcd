#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "core/arith.hpp"
#include "core/expsum.hpp"
#include "doctest.h"

using namespace cl::expsum;

namespace {
double dist(cplx a, cplx b) { return std::abs(a - b); }
}

TEST_CASE("weyl sum at alpha = 0 is P") {
  CHECK(dist(weyl_sum_f(0.0, 17, 3), cplx(17, 0)) < 1e-12);
}

TEST_CASE("weyl sum is bounded by P and 1-periodic") {
  for (double alpha : {0.1, 0.37, 0.93}) {
    cplx f = weyl_sum_f(alpha, 50, 2);
    CHECK(std::abs(f) <= 50.0 + 1e-9);
    CHECK(dist(f, weyl_sum_f(alpha + 1.0, 50, 2)) < 1e-9);
  }
}

TEST_CASE("smooth weyl sum pinned example: h(1/2; A(10,3), k=2) = 1") {
  auto set = cl::arith::enumerate_smooth({10, 3, 2});
  CHECK(dist(smooth_weyl_sum_h(0.5, set), cplx(1, 0)) < 1e-12);
}

TEST_CASE("complete sum pinned example: S(4,1) = 2 + 2i for squares") {
  CHECK(dist(complete_sum_S(4, 1, 2), cplx(2, 2)) < 1e-12);
}

TEST_CASE("complete sum S(q,0) = q") {
  CHECK(dist(complete_sum_S(7, 0, 3), cplx(7, 0)) < 1e-12);
}

TEST_CASE("complete sum against a direct phase sum") {
  for (std::uint64_t q : {3ull, 5ull, 9ull})
    for (std::uint64_t a = 1; a < q; ++a) {
      cplx direct = 0;
      for (std::uint64_t r = 1; r <= q; ++r) {
        double phase = 2 * std::numbers::pi *
                       static_cast<double>(a * (r * r * r % q) % q) /
                       static_cast<double>(q);
        direct += cplx(std::cos(phase), std::sin(phase));
      }
      CHECK(dist(complete_sum_S(q, a, 3), direct) < 1e-9);
    }
}

TEST_CASE("oscillatory integral: v(0) = P and k=1 closed form") {
  CHECK(dist(oscillatory_v(0.0, 12.5, 2), cplx(12.5, 0)) < 1e-9);
  // k=1: v(beta) = (e(beta P) - 1) / (2 pi i beta)
  double beta = 0.3, P = 9.0;
  cplx expected = (unit_phase(beta * P) - cplx(1, 0)) /
                  (cplx(0, 2 * std::numbers::pi) * beta);
  CHECK(dist(oscillatory_v(beta, P, 1), expected) < 1e-8);
}

TEST_CASE("arc dissection structure") {
  ArcDissection d(100, 2, 2);
  // q=1: a=0; q=2: a=1
  REQUIRE(d.arcs().size() == 2);
  CHECK(d.arcs()[0].q == 1);
  CHECK(d.arcs()[0].a == 0);
  CHECK(d.arcs()[0].halfwidth == doctest::Approx(2.0 / 10000.0));
  CHECK(d.arcs()[1].q == 2);
  CHECK(d.arcs()[1].a == 1);
  CHECK(d.arcs()[1].halfwidth == doctest::Approx(1.0 / 10000.0));
  CHECK_FALSE(d.overlapping());
}

TEST_CASE("arc count is 1 + sum of totients") {
  ArcDissection d(1000, 3, 10);
  // 1 + phi(2)+...+phi(10) = 1 + 31
  CHECK(d.arcs().size() == 32);
}

TEST_CASE("locate prefers the lowest denominator and wraps the torus") {
  ArcDissection d(100, 2, 3);
  auto at_zero = d.locate(0.0);
  REQUIRE(at_zero.has_value());
  CHECK(at_zero->q == 1);
  // just below 1 lies in the q=1 arc around 0 by torus distance
  auto wrap = d.locate(1.0 - 1e-5);
  REQUIRE(wrap.has_value());
  CHECK(wrap->q == 1);
  CHECK(wrap->a == 0);
  auto off = d.locate(0.4);  // far from every a/q with q <= 3? 0.4 is not;
  // 0.4 is within 1/3 +- 3/(9 * 10^4)? |0.4 - 1/3| = 0.0667 >> halfwidth
  CHECK_FALSE(off.has_value());
}

TEST_CASE("dissection rejects out-of-range Q") {
  CHECK_THROWS_AS(ArcDissection(10, 2, 0.5), std::out_of_range);
  CHECK_THROWS_AS(ArcDissection(10, 2, 6.0), std::out_of_range);
}

TEST_CASE("major arc approximant at an arc center") {
  ArcDissection d(200, 2, 4);
  auto m = major_arc_approximant(0.5, d);  // alpha = 1/2
  REQUIRE(m.on_major);
  CHECK(m.q == 2);
  CHECK(m.a == 1);
  // at the center, value = S(q,a)/q * v(0) = S(q,a)/q * P
  cplx expected = complete_sum_S(2, 1, 2) / 2.0 * 200.0;
  CHECK(dist(m.value, expected) < 1e-6);
}

TEST_CASE("major arc approximant tracks f near 0") {
  double P = 500;
  ArcDissection d(P, 2, 4);
  double alpha = 1e-7;
  auto m = major_arc_approximant(alpha, d);
  REQUIRE(m.on_major);
  cplx f = weyl_sum_f(alpha, P, 2);
  CHECK(std::abs(f - m.value) < 5.0);  // error << P
}

TEST_CASE("torus mean is exact for trigonometric polynomials") {
  auto poly = [](double a) {
    return unit_phase(3 * a) + 2.0 * unit_phase(-2 * a) + cplx(5, 0);
  };
  cplx mean = torus_mean(7, 3, poly);
  CHECK(dist(mean, cplx(5, 0)) < 1e-12);
  CHECK_THROWS_AS(torus_mean(6, 3, poly), std::invalid_argument);
}

TEST_CASE("minor arc survey produces a sane report") {
  SurveyConfig cfg;
  cfg.k = 2;
  cfg.P_ladder = {32, 64, 128, 256};
  cfg.Q_exponent = 0.5;
  cfg.grid_size = 1000;
  auto rep = minor_arc_survey(cfg);
  CHECK(rep.sup_abs > 0.0);
  CHECK(rep.sup_abs < 256.0);
  CHECK(rep.sup_alpha >= 0.0);
  CHECK(rep.sup_alpha < 1.0);
  // minor-arc sup grows strictly slower than P
  CHECK(rep.tau_hat > 0.0);
  CHECK_FALSE(rep.has_delta);
}
