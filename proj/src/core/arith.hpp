#ifndef CIRCLELAB_ARITH_HPP
#define CIRCLELAB_ARITH_HPP

#include <cstdint>
#include <vector>

namespace cl::arith {

// Parameters of a smooth-number experiment: integers in [1,P] with all prime
// factors <= R, used with k-th powers. eta = log R / log P.
struct SmoothParams {
  std::uint64_t P = 1;
  std::uint64_t R = 2;
  int k = 2;

  double eta() const;
  void validate() const;  // throws std::invalid_argument
};

struct SmoothSet {
  SmoothParams params;
  std::vector<std::uint64_t> elements;  // strictly increasing, starts at 1

  std::size_t card() const { return elements.size(); }
};

// All x in [1,P] whose prime divisors are all <= R, ascending. 1 is included.
SmoothSet enumerate_smooth(const SmoothParams& params);

// Primes up to n, by sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Decompose p_h as p^h; returns false if p_h is not a prime power (or is 1).
bool prime_power_split(std::uint64_t p_h, std::uint64_t& p, int& h);

// x^k mod m (m >= 1, k >= 0).
std::uint64_t pow_mod(std::uint64_t x, std::uint64_t k, std::uint64_t m);

// t[c] = #{x mod p_h : x^k == c (mod p_h)}; sum of entries equals p_h.
// p_h must be a prime power.
std::vector<std::uint64_t> power_residue_table(std::uint64_t p_h, int k);

// Dickman's rho: rho == 1 on [0,1], 1 - log u on [1,2], delay ODE beyond.
double dickman_rho(double u);

}  // namespace cl::arith

#endif
