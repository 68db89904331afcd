#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "core/arith.hpp"
#include "core/counts.hpp"
#include "core/singular.hpp"
#include "doctest.h"

using namespace cl::singular;

TEST_CASE("local counts match direct enumeration") {
  for (std::uint64_t p : {2ull, 3ull, 5ull})
    for (int h = 1; h <= 3; ++h)
      for (int s = 1; s <= 3; ++s)
        for (int k = 1; k <= 3; ++k) {
          std::uint64_t mod = 1;
          for (int i = 0; i < h; ++i) mod *= p;
          auto table = local_count_table(p, h, s, k);
          REQUIRE(table.size() == mod);
          // enumerate tuples directly
          std::vector<std::uint64_t> direct(mod, 0);
          std::vector<std::uint64_t> idx(s, 0);
          while (true) {
            std::uint64_t sum = 0;
            for (int i = 0; i < s; ++i)
              sum += cl::arith::pow_mod(idx[i], k, mod);
            ++direct[sum % mod];
            int i = 0;
            while (i < s && ++idx[i] == mod) idx[i++] = 0;
            if (i == s) break;
          }
          CHECK(table == direct);
        }
}

TEST_CASE("local density for k=1 is exactly 1") {
  for (std::uint64_t p : {2ull, 3ull, 13ull}) {
    auto d = local_density(p, 99, 3, 1, 8);
    CHECK(d.value == doctest::Approx(1.0));
    CHECK(d.stabilized);
  }
}

TEST_CASE("local density regression: no premature stabilization") {
  // v_2(5348) for five squares: levels read 1, 0.75, 0.75, 0.71875, ...
  // and the true limit is 0.703125; naive consecutive agreement stops at 0.75
  auto d = local_density(2, 5348, 5, 2, 12);
  CHECK(d.value == doctest::Approx(0.703125).epsilon(1e-12));
  CHECK(d.stabilized);
}

TEST_CASE("local density rejects composite p") {
  CHECK_THROWS_AS(local_density(6, 10, 2, 2, 4), std::invalid_argument);
}

TEST_CASE("singular series for k=1 is 1") {
  auto ss = singular_series(123, 3, 1, 50, 6, 50);
  CHECK(ss.value == doctest::Approx(1.0));
  for (const auto& f : ss.factors) CHECK(f.value == doctest::Approx(1.0));
}

TEST_CASE("series invariant: value is the product of its factors") {
  auto ss = singular_series(10, 5, 2, 100, 10, 100);
  double prod = 1.0;
  for (const auto& f : ss.factors) prod *= f.value;
  CHECK(ss.value == doctest::Approx(prod));
  CHECK_FALSE(ss.s_below_recommended);  // s=5 >= max(4, 3)
  CHECK(singular_series(10, 2, 2, 20, 4, 20).s_below_recommended);
}

TEST_CASE("euler product and q-sum truncations agree") {
  for (std::uint64_t n : {10ull, 123ull, 5348ull}) {
    auto ss = singular_series(n, 5, 2, 100, 10, 100);
    CHECK(std::abs(ss.value - ss.alt_qsum) / ss.value < 0.05);
  }
}

TEST_CASE("gamma factor for k=1 is 1/(s-1)!") {
  double fact = 1.0;
  for (int s = 2; s <= 8; ++s) {
    fact *= s - 1;
    auto mt = main_term(100, s, 1, 1.0);
    CHECK(mt.gamma_factor == doctest::Approx(1.0 / fact).epsilon(1e-12));
  }
}

TEST_CASE("main term for k=1, s=2 approximates the exact count n-1") {
  auto mt = main_term(10000, 2, 1, 1.0);
  CHECK(std::abs(mt.value - 9999.0) / 9999.0 < 1e-2);
}

TEST_CASE("main term matches the exact count for eight squares") {
  auto ss = singular_series(10000, 8, 2, 100, 8, 100);
  auto mt = main_term(10000, 8, 2, ss.value);
  double exact = static_cast<double>(cl::counts::count_R(10000, 8, 2));
  CHECK(std::abs(mt.value - exact) / exact < 0.20);
}

TEST_CASE("smooth correction multiplies by rho(1/eta)^s") {
  auto plain = main_term(5000, 4, 2, 1.3);
  auto smooth = main_term(5000, 4, 2, 1.3, 0.5);
  double rho2 = cl::arith::dickman_rho(2.0);
  CHECK(smooth.smooth_factor == doctest::Approx(std::pow(rho2, 4)));
  CHECK(smooth.value == doctest::Approx(plain.value * std::pow(rho2, 4)));
}

TEST_CASE("main term rejects negative series values") {
  CHECK_THROWS_AS(main_term(10, 2, 2, -1.0), std::invalid_argument);
}
