#ifndef CIRCLELAB_COUNTS_HPP
#define CIRCLELAB_COUNTS_HPP

#include <cstdint>
#include <vector>

#include "arith.hpp"

namespace cl::counts {

// Ordered-representation counts: table[m] = #{(x_1..x_t) from the source
// with x_1^k + ... + x_t^k = m}. Dense up to t * max(x)^k.
struct RepTable {
  int k = 2;
  int t = 1;
  std::vector<std::uint64_t> powers;  // x^k for the eligible x, ascending
  std::vector<std::uint64_t> table;   // indexed by m, 0..limit

  std::uint64_t at(std::uint64_t m) const {
    return m < table.size() ? table[m] : 0;
  }
};

// Source x in [1, floor(P)] (full range).
std::vector<std::uint64_t> full_range_source(double P);

// k-th powers of a source, with overflow checks.
std::vector<std::uint64_t> kth_powers(const std::vector<std::uint64_t>& xs, int k);

// Build by repeated self-convolution of the t=1 table. limit = 0 means
// t * max power; otherwise the table is truncated at `limit`.
RepTable rep_table(int k, int t, const std::vector<std::uint64_t>& xs,
                   std::uint64_t limit = 0);

// S_t(P,R) = sum_m r_t(m)^2 = # solutions of sum x_i^k = sum y_i^k over the
// smooth set.
std::uint64_t mean_value_S(int k, int t, const arith::SmoothParams& params);

// Same, for an explicit source.
std::uint64_t mean_value_S_source(int k, int t, const std::vector<std::uint64_t>& xs);

// R_{s,k}(n) over x in [1, n^{1/k}]^s, or a smooth source when xs given.
std::uint64_t count_R(std::uint64_t n, int s, int k);
std::uint64_t count_R_source(std::uint64_t n, int s, int k,
                             const std::vector<std::uint64_t>& xs);

// N(X): distinct values a^3+b^3+c^3 <= X with a,b,c >= 1.
std::uint64_t count_three_cubes(std::uint64_t X);

// Integers n in (N/2, N] with no representation as s k-th powers of the source.
std::vector<std::uint64_t> exceptional_set(std::uint64_t N, int s, int k,
                                           const std::vector<std::uint64_t>& xs);

struct MomentReport {
  std::uint64_t second_moment = 0;  // card of the set (Parseval)
  std::uint64_t fourth_moment = 0;  // additive energy
  std::uint64_t mixed_moment = 0;   // int |h|^{2t} |K|^2, when t > 0
  bool has_mixed = false;
};

// Moments of K(alpha) = sum_{n in Z} e(n alpha). The mixed moment convolves
// r_t over the given smooth source with the set indicator.
MomentReport K_moments(const std::vector<std::uint64_t>& members, int t,
                       const arith::SmoothParams& h_params);
MomentReport K_moments_basic(const std::vector<std::uint64_t>& members);

struct DifferencingConfig {
  std::vector<long long> psi;  // coefficients, psi[i] * z^i, degree >= 2
  double P = 10;               // 1 <= z,w <= P
  double T = 10;               // smooth variables from A(T,R) (or A(T/M,R))
  double M = 1;                // differencing parameter bound
  std::uint64_t R = 10;        // smoothness bound
  int s = 1;
  int k = 2;
  bool x_above_M = false;      // optional filter x_i, y_i > M in (2.3)
  bool refine_congruence = false;  // impose z == w mod m^k in (2.4)
};

// Solutions of psi(z)-psi(w) = sum_i (x_i^k - y_i^k), z,w in [1,P],
// x_i, y_i in A(T,R).
std::uint64_t count_eq_2_3(const DifferencingConfig& cfg);

// Solutions of psi(z)-psi(w) = m^k sum_i (u_i^k - v_i^k), with M < m <= M R,
// gcd(psi'(z) psi'(w), m) = 1 and u_i, v_i in A(T/M, R).
std::uint64_t count_eq_2_4(const DifferencingConfig& cfg);

// psi_1(z; h; m) = m^{-k} (psi(z + h m^k) - psi(z)); integer coefficients,
// degree d-1.
std::vector<long long> difference_polynomial(const std::vector<long long>& psi,
                                             long long h, long long m, int k);

// lambda-hat: least-squares slope of log S_t(P,R) against log P, with R
// chosen as ceil(P^theta) (theta >= 1 means R = P).
struct LambdaFit {
  double lambda_hat = 0.0;
  double residual = 0.0;
  bool low_confidence = false;
  std::vector<std::uint64_t> counts;
};
LambdaFit fit_permissible_exponent(int k, int t, const std::vector<double>& P_ladder,
                                   double theta);

}  // namespace cl::counts

#endif
