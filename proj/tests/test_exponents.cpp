#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "core/exponents.hpp"
#include "doctest.h"

using namespace cl::exponents;

TEST_CASE("xi constant to eight places") {
  CHECK(xi_constant() == doctest::Approx((std::sqrt(2833.0) - 43.0) / 41.0));
  CHECK(std::abs(xi_constant() - 0.24941301) < 5e-9);
}

TEST_CASE("admissible delta satisfies its defining equation") {
  for (double k : {4.0, 7.0, 12.0, 33.0})
    for (double t : {1.0, 2.5, 6.0, 20.0}) {
      double d = solve_admissible_delta(k, t);
      CHECK(d > 0.0);
      double residual = d * std::exp(d / k) - k * std::exp(1.0 - 2.0 * t / k);
      CHECK(std::abs(residual) < 1e-10);
    }
}

TEST_CASE("delta at t = k/2 is k times the omega constant") {
  for (double k : {6.0, 10.0, 40.0})
    CHECK(solve_admissible_delta(k, k / 2) / k ==
          doctest::Approx(0.5671432904097838).epsilon(1e-10));
}

TEST_CASE("closed-form lambda and its limits") {
  // lambda_t = 2t - k + k e^{1 - 2t/k}; at large t it approaches 2t - k
  CHECK(permissible_lambda_closed(4, 40) ==
        doctest::Approx(76.0).epsilon(1e-3));
  // consistency with the solved Delta: lambda <= 2t - k + Delta would need
  // Delta = k e^{1-2t/k}, and the solved Delta is strictly smaller
  double k = 8, t = 6;
  CHECK(solve_admissible_delta(k, t) < k * std::exp(1 - 2 * t / k));
}

TEST_CASE("quasi-diagonal associated exponent") {
  auto d = associated_delta_quasidiagonal(100, 5);
  REQUIRE(d.has_value());
  double expected = (4.0 * std::sqrt(100.0) / (std::exp(1.0) * 5.0)) *
                    std::exp(-4.0 * 100.0 /
                             (std::exp(2.0) * 25.0));
  CHECK(*d == doctest::Approx(expected));
  CHECK_FALSE(associated_delta_quasidiagonal(100, 2.0).has_value());
  CHECK_FALSE(associated_delta_quasidiagonal(100, 8.0).has_value());
  // upper edge 2 sqrt(k)/e is inside the range
  CHECK(associated_delta_quasidiagonal(100, 2.0 * 10.0 / std::exp(1.0))
            .has_value());
}

TEST_CASE("differencing iteration: fixed and adaptive rules") {
  double k = 20;
  auto fixed = iterate_differencing(k, k, 5, PhiRule::Fixed, 0.1);
  REQUIRE(fixed.size() == 6);
  CHECK(fixed[0] == k);
  for (int i = 0; i < 5; ++i)
    CHECK(fixed[i + 1] ==
          doctest::Approx(fixed[i] * 0.9 + k * 0.1 - 1.0));

  auto adaptive = iterate_differencing(k, k, 8, PhiRule::Adaptive);
  for (int i = 0; i < 8; ++i) {
    // identity: Delta_{s+1} = Delta_s (1 - 2/(k + Delta_s))
    double expected = adaptive[i] * (1.0 - 2.0 / (k + adaptive[i]));
    CHECK(adaptive[i + 1] == doctest::Approx(expected).epsilon(1e-14));
  }
  // iterates decrease toward the closed form
  CHECK(adaptive.back() < adaptive.front());
}

TEST_CASE("exponent record structure") {
  auto rec = exponent_record(3, 3);
  CHECK(rec.outside_corollary);  // corollary needs k >= 4
  CHECK(rec.lambda > 3.0);
  CHECK_FALSE(rec.provenance.empty());

  auto rec2 = exponent_record(10, 2);
  CHECK_FALSE(rec2.outside_corollary);
  // classical diagonal at t <= 2: lambda = t + delta with delta <= t
  CHECK(rec2.lambda <= 4.0 + 1e-12);
}

TEST_CASE("sigma formula and feasibility") {
  SigmaResult r = sigma_of_k(10, 6, 20, 20);
  REQUIRE(r.feasible);
  double num = 10 - r.delta_t - r.delta_s * r.delta_w;
  double den = 2 * (6 * (10 + r.delta_w - r.delta_t) +
                    20 * 20 * (1 + r.delta_s));
  // a small-t triple drives the numerator negative
  CHECK_FALSE(sigma_of_k(10, 6, 4, 4).feasible);
  CHECK(r.sigma == doctest::Approx(num / den));
  // 2s >= k+1 violated
  CHECK_THROWS_AS(sigma_of_k(10, 4, 4, 4), std::invalid_argument);
}

TEST_CASE("optimize_sigma finds a positive optimum dominating samples") {
  SigmaResult best = optimize_sigma(12, 40, 40, 40);
  REQUIRE(best.feasible);
  CHECK(best.sigma > 0.0);
  for (int s = 7; s <= 40; s += 11)
    for (int t = 1; t <= 40; t += 7)
      for (int w = 1; w <= 40; w += 13) {
        SigmaResult r = sigma_of_k(12, s, t, w);
        if (r.feasible) CHECK(r.sigma <= best.sigma + 1e-15);
      }
}

TEST_CASE("g bound recipe pinned values") {
  auto g = g_bound_recipe(10, 1.0);
  CHECK(g.t_choice == 20);
  CHECK(g.s_choice == 53);
  auto g20 = g_bound_recipe(20, 1.0);
  CHECK(g20.main_term == doctest::Approx(121.86).epsilon(1e-3));
  CHECK(g20.main_term < 142.0);
  CHECK_THROWS_AS(g_bound_recipe(2, 1.0), std::domain_error);
}

TEST_CASE("reference G(k) table") {
  const auto& table = reference_g_table();
  REQUIRE(table.size() == 18);
  CHECK(table.front().k == 3);
  CHECK(table.front().bound == 7);
  CHECK(table.back().k == 20);
  CHECK(table.back().bound == 142);
  int with_congruence = 0;
  for (const auto& e : table) {
    CHECK(e.citation != nullptr);
    if (e.congruence_conditions) {
      ++with_congruence;
      CHECK(e.k == 4);  // only G#(4)
      CHECK(e.bound == 12);
    }
  }
  CHECK(with_congruence == 1);
}
