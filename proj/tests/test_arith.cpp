#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "core/arith.hpp"
#include "doctest.h"

using namespace cl::arith;

TEST_CASE("smooth enumeration matches the pinned example") {
  SmoothSet s = enumerate_smooth({10, 3, 2});
  CHECK(s.card() == 7);
  CHECK(s.elements == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9});
  CHECK(s.params.eta() == doctest::Approx(std::log(3.0) / std::log(10.0)));
}

TEST_CASE("smooth enumeration with R = P is the full range") {
  SmoothSet s = enumerate_smooth({50, 50, 2});
  CHECK(s.card() == 50);
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(s.elements[i] == i + 1);
}

TEST_CASE("smooth enumeration agrees with trial division") {
  SmoothSet s = enumerate_smooth({500, 7, 3});
  std::size_t direct = 0;
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t m = n;
    for (std::uint64_t p : {2, 3, 5, 7})
      while (m % p == 0) m /= p;
    if (m == 1) ++direct;
  }
  CHECK(s.card() == direct);
}

TEST_CASE("smooth parameter validation") {
  CHECK_THROWS_AS(enumerate_smooth({10, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_smooth({0, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_smooth({4, 8, 2}), std::invalid_argument);
}

TEST_CASE("primes_up_to") {
  auto ps = primes_up_to(30);
  CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("prime_power_split") {
  std::uint64_t p = 0;
  int h = 0;
  CHECK(prime_power_split(125, p, h));
  CHECK(p == 5);
  CHECK(h == 3);
  CHECK(prime_power_split(2, p, h));
  CHECK(p == 2);
  CHECK(h == 1);
  CHECK_FALSE(prime_power_split(12, p, h));
  CHECK_FALSE(prime_power_split(1, p, h));
}

TEST_CASE("pow_mod against naive exponentiation") {
  for (std::uint64_t x = 0; x < 12; ++x)
    for (std::uint64_t k = 0; k < 8; ++k) {
      std::uint64_t naive = 1 % 97;
      for (std::uint64_t i = 0; i < k; ++i) naive = naive * x % 97;
      CHECK(pow_mod(x, k, 97) == naive);
    }
}

TEST_CASE("power residue table: squares mod 4") {
  auto t = power_residue_table(4, 2);
  CHECK(t == std::vector<std::uint64_t>{2, 2, 0, 0});
}

TEST_CASE("power residue table sums to the modulus") {
  for (std::uint64_t mod : {2ull, 8ull, 9ull, 27ull, 25ull, 343ull})
    for (int k : {1, 2, 3, 4}) {
      auto t = power_residue_table(mod, k);
      CHECK(std::accumulate(t.begin(), t.end(), std::uint64_t{0}) == mod);
    }
}

TEST_CASE("dickman rho pinned values") {
  CHECK(dickman_rho(0.5) == doctest::Approx(1.0));
  CHECK(dickman_rho(1.0) == doctest::Approx(1.0));
  CHECK(dickman_rho(2.0) == doctest::Approx(1.0 - std::log(2.0)));
  CHECK(dickman_rho(3.0) == doctest::Approx(0.0486084).epsilon(1e-4));
}

TEST_CASE("dickman rho is positive and decreasing") {
  double prev = dickman_rho(1.0);
  for (double u = 1.5; u <= 8.0; u += 0.5) {
    double v = dickman_rho(u);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}
