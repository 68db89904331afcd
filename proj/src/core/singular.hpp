#ifndef CIRCLELAB_SINGULAR_HPP
#define CIRCLELAB_SINGULAR_HPP

#include <cstdint>
#include <vector>

namespace cl::singular {

struct LocalDensity {
  std::uint64_t p = 2;
  int level = 1;          // the level h the value was taken at
  double value = 1.0;     // p^{h(1-s)} * #solutions mod p^h
  bool stabilized = false;
};

// Counts solutions of x_1^k + ... + x_s^k == n (mod p^h) by cyclic
// convolution of the k-th power residue table, raising h until two
// consecutive levels agree (within 1e-12) or h_max / the capacity ceiling
// is reached.
LocalDensity local_density(std::uint64_t p, std::uint64_t n, int s, int k,
                           int h_max);

// Exact solution count mod p^h (the integer behind the density).
std::uint64_t local_count(std::uint64_t p, int h, std::uint64_t n, int s, int k);

// Full table of counts mod p^h, indexed by the target residue.
std::vector<std::uint64_t> local_count_table(std::uint64_t p, int h, int s, int k);

struct SingularSeriesApprox {
  std::uint64_t n = 0;
  int s = 0, k = 0;
  std::uint64_t prime_cutoff = 100;
  std::vector<LocalDensity> factors;
  double value = 1.0;    // truncated Euler product
  double alt_qsum = 1.0; // sum_{q<=Q0} sum_{(a,q)=1} (S(q,a)/q)^s e(-na/q)
  bool all_stabilized = true;
  bool s_below_recommended = false;  // s < max(4, k+1)
};

SingularSeriesApprox singular_series(std::uint64_t n, int s, int k,
                                     std::uint64_t prime_cutoff, int h_max,
                                     std::uint64_t q_cutoff);

struct MainTerm {
  std::uint64_t n = 0;
  int s = 0, k = 0;
  double gamma_factor = 1.0;   // Gamma(1+1/k)^s / Gamma(s/k)
  double smooth_factor = 1.0;  // c(eta)^s = rho(1/eta)^s, or 1
  double series = 1.0;
  double value = 0.0;          // gamma_factor * smooth_factor * series * n^{s/k-1}
};

// The major-arc main term; eta > 0 applies the smooth-number correction.
MainTerm main_term(std::uint64_t n, int s, int k, double series_value,
                   double eta = 0.0);

}  // namespace cl::singular

#endif
