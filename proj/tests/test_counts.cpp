#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "core/counts.hpp"
#include "doctest.h"

using namespace cl::counts;

TEST_CASE("rep table for A(4,4), k=2 matches hand counts") {
  auto xs = full_range_source(4);
  RepTable r = rep_table(2, 2, xs);
  CHECK(r.at(2) == 1);   // 1+1
  CHECK(r.at(5) == 2);   // 1+4 both orders
  CHECK(r.at(8) == 1);   // 4+4
  CHECK(r.at(25) == 2);  // 9+16 both orders
  CHECK(r.at(3) == 0);
  std::uint64_t total = std::accumulate(r.table.begin(), r.table.end(),
                                        std::uint64_t{0});
  CHECK(total == 16);  // 4^2 ordered pairs
}

TEST_CASE("mean value pinned example S_2(4,4) = 28") {
  CHECK(mean_value_S(2, 2, {4, 4, 2}) == 28);
}

TEST_CASE("mean value t=1 equals the source size") {
  CHECK(mean_value_S(3, 1, {30, 5, 3}) ==
        cl::arith::enumerate_smooth({30, 5, 3}).card());
}

TEST_CASE("mean value against tuple enumeration") {
  auto xs = full_range_source(5);
  // S_2 for k=3 over [1,5]: enumerate x1^3+x2^3 = y1^3+y2^3
  std::uint64_t direct = 0;
  for (auto x1 : xs)
    for (auto x2 : xs)
      for (auto y1 : xs)
        for (auto y2 : xs)
          if (x1 * x1 * x1 + x2 * x2 * x2 == y1 * y1 * y1 + y2 * y2 * y2)
            ++direct;
  CHECK(mean_value_S_source(3, 2, xs) == direct);
}

TEST_CASE("count_R small cases") {
  CHECK(count_R(5, 2, 2) == 2);   // (1,2), (2,1)
  CHECK(count_R(6, 2, 2) == 0);
  CHECK(count_R(9, 3, 3) == 0);
  CHECK(count_R(3, 3, 3) == 1);   // 1+1+1
  CHECK(count_R(10, 2, 1) == 9);  // ordered positive pairs summing to 10
}

TEST_CASE("count_R with a smooth source") {
  // A(4,3) = {1,2,3,4}; 25 = 9+16 representable, but A(4,2) omits 3
  auto with3 = count_R_source(25, 2, 2, {1, 2, 3, 4});
  auto without3 = count_R_source(25, 2, 2, {1, 2, 4});
  CHECK(with3 == 2);
  CHECK(without3 == 0);
}

TEST_CASE("three cubes count against a direct sieve") {
  std::uint64_t X = 2000;
  std::set<std::uint64_t> vals;
  for (std::uint64_t a = 1; a * a * a <= X; ++a)
    for (std::uint64_t b = a; a * a * a + b * b * b <= X; ++b)
      for (std::uint64_t c = b; a * a * a + b * b * b + c * c * c <= X; ++c)
        vals.insert(a * a * a + b * b * b + c * c * c);
  CHECK(count_three_cubes(X) == vals.size());
  CHECK(count_three_cubes(2) == 0);
  CHECK(count_three_cubes(3) == 1);
}

TEST_CASE("exceptional set for two squares in (10, 20]") {
  auto z = exceptional_set(20, 2, 2, full_range_source(4));
  CHECK(z == std::vector<std::uint64_t>{11, 12, 14, 15, 16, 19});
}

TEST_CASE("moment pins for Z = {2,3,4}") {
  auto m = K_moments_basic({2, 3, 4});
  CHECK(m.second_moment == 3);
  CHECK(m.fourth_moment == 19);
  CHECK_FALSE(m.has_mixed);
}

TEST_CASE("fourth moment equals the additive energy") {
  std::vector<std::uint64_t> z = {1, 5, 9, 11, 20};
  std::uint64_t energy = 0;
  for (auto a : z)
    for (auto b : z)
      for (auto c : z)
        for (auto d : z)
          if (a + b == c + d) ++energy;
  CHECK(K_moments_basic(z).fourth_moment == energy);
  CHECK(K_moments_basic(z).second_moment == z.size());
}

TEST_CASE("mixed moment with a tiny smooth source") {
  // A(2,2) = {1,2}, k=2: r_1 supported at 1 and 4; shifted copies of
  // {2,3} stay disjoint, so the mixed moment is 4
  auto m = K_moments({2, 3}, 1, {2, 2, 2});
  REQUIRE(m.has_mixed);
  CHECK(m.mixed_moment == 4);
}

TEST_CASE("differencing counter (2.3) on a hand-checked instance") {
  DifferencingConfig cfg;
  cfg.psi = {0, 0, 1};  // z^2
  cfg.P = 3;
  cfg.T = 2;
  cfg.M = 1;
  cfg.R = 2;
  cfg.s = 1;
  cfg.k = 2;
  CHECK(count_eq_2_3(cfg) == 8);
  cfg.x_above_M = true;  // only x = y = 2 survives
  CHECK(count_eq_2_3(cfg) == 3);
}

TEST_CASE("differencing counter (2.4) against brute force") {
  DifferencingConfig cfg;
  cfg.psi = {0, 1, 1};  // z^2 + z, psi' odd everywhere
  cfg.P = 3;
  cfg.T = 4;
  cfg.M = 2;
  cfg.R = 2;
  cfg.s = 1;
  cfg.k = 2;
  auto psi_val = [](long long z) { return z * z + z; };
  auto psi_der = [](long long z) { return 2 * z + 1; };
  std::uint64_t direct = 0;
  for (long long m = 3; m <= 4; ++m)
    for (long long z = 1; z <= 3; ++z)
      for (long long w = 1; w <= 3; ++w) {
        if (std::gcd(psi_der(z) * psi_der(w), m) != 1) continue;
        for (long long u = 1; u <= 2; ++u)
          for (long long v = 1; v <= 2; ++v)
            if (psi_val(z) - psi_val(w) == m * m * (u * u - v * v)) ++direct;
      }
  CHECK(count_eq_2_4(cfg) == direct);

  // refined congruence z == w mod m^k forces z = w here (m^2 > P)
  cfg.refine_congruence = true;
  std::uint64_t refined = count_eq_2_4(cfg);
  std::uint64_t diag = 0;
  for (long long m = 3; m <= 4; ++m)
    for (long long z = 1; z <= 3; ++z) {
      if (std::gcd(psi_der(z) * psi_der(z), m) != 1) continue;
      diag += 2;  // u = v, two choices
    }
  CHECK(refined == diag);
}

TEST_CASE("difference polynomial pins") {
  // psi = z^3, h = 1, m = 1: (z+1)^3 - z^3 = 3z^2 + 3z + 1
  CHECK(difference_polynomial({0, 0, 0, 1}, 1, 1, 1) ==
        std::vector<long long>{1, 3, 3});
  // psi = z^2, h = 1, m = 2, k = 2: ((z+4)^2 - z^2)/4 = 2z + 4
  CHECK(difference_polynomial({0, 0, 1}, 1, 2, 2) ==
        std::vector<long long>{4, 2});
}

TEST_CASE("difference polynomial drops the degree by one") {
  std::vector<long long> psi = {3, -1, 2, 0, 5};  // degree 4
  auto d = difference_polynomial(psi, 2, 3, 1);
  CHECK(d.size() == 4);
  // leading coefficient: k=1 gives m^{-1}(psi(z+2*3) - psi(z)),
  // top term 5 * 4 * 6 z^3 / 3 = 40 z^3
  CHECK(d.back() == 40);
}

TEST_CASE("fitted lambda respects trivial bounds") {
  auto fit = fit_permissible_exponent(2, 2, {16, 32, 64, 128}, 1.0);
  // t <= lambda_hat <= 2t for a second moment
  CHECK(fit.lambda_hat > 2.0);
  CHECK(fit.lambda_hat < 4.0);
  CHECK(fit.counts.size() == 4);
  CHECK(fit.counts[0] == mean_value_S(2, 2, {16, 16, 2}));
}
