#include "singular.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "arith.hpp"
#include "errors.hpp"
#include "expsum.hpp"

namespace cl::singular {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 upow(u64 base, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > table_ceiling() / base) throw capacity_error("prime power exceeds ceiling");
    r *= base;
  }
  return r;
}
}  // namespace

namespace {
// s-fold cyclic convolution of the k-th power residue table mod p^h
std::vector<u128> local_count_wide(u64 p, int h, int s, int k) {
  if (s < 1) throw std::invalid_argument("local_count: s >= 1");
  u64 mod = upow(p, h);
  std::vector<u64> t1 = arith::power_residue_table(mod, k);
  std::vector<u128> cur(t1.begin(), t1.end());
  constexpr u128 kLimit = ~static_cast<u128>(0) >> 1;
  for (int j = 1; j < s; ++j) {
    std::vector<u128> next(mod, 0);
    for (u64 a = 0; a < mod; ++a) {
      if (cur[a] == 0) continue;
      if (cur[a] > kLimit / mod) throw capacity_error("local count overflow");
      for (u64 b = 0; b < mod; ++b) {
        if (t1[b] == 0) continue;
        u64 c = a + b;
        if (c >= mod) c -= mod;
        next[c] += cur[a] * t1[b];
      }
    }
    cur.swap(next);
  }
  return cur;
}
}  // namespace

std::vector<std::uint64_t> local_count_table(std::uint64_t p, int h, int s, int k) {
  std::vector<u128> wide = local_count_wide(p, h, s, k);
  std::vector<u64> out(wide.size());
  for (std::size_t i = 0; i < wide.size(); ++i) {
    if (wide[i] > static_cast<u128>(UINT64_MAX))
      throw capacity_error("local count overflow");
    out[i] = static_cast<u64>(wide[i]);
  }
  return out;
}

std::uint64_t local_count(std::uint64_t p, int h, std::uint64_t n, int s, int k) {
  std::vector<u64> table = local_count_table(p, h, s, k);
  return table[n % table.size()];
}

LocalDensity local_density(std::uint64_t p, std::uint64_t n, int s, int k,
                           int h_max) {
  u64 q = 0;
  int e = 0;
  if (!arith::prime_power_split(p, q, e) || e != 1)
    throw std::invalid_argument("local_density: p must be prime");
  LocalDensity out;
  out.p = p;
  // Hensel floor: agreement below this level can be a coincidence
  // (e.g. p=2, k=2, n=5348 agrees at levels 2,3 yet drops later).
  int vk = 0, vn = 0;
  for (u64 m = static_cast<u64>(k); m % p == 0; m /= p) ++vk;
  for (u64 m = n; m > 0 && m % p == 0; m /= p) ++vn;
  int min_level = vn + 2 * vk + (p == 2 ? 4 : 2);
  double prev = 0.0;
  bool have_prev = false;
  for (int h = 1; h <= h_max; ++h) {
    // stay within the cyclic-convolution budget
    u128 mod = 1;
    for (int i = 0; i < h; ++i) mod *= p;
    if (mod > 1000000) break;
    if (static_cast<double>(mod) * static_cast<double>(mod) * s > 4e8)
      break;  // cyclic-convolution work budget
    std::vector<u128> table = local_count_wide(p, h, s, k);
    double count = static_cast<double>(table[n % table.size()]);
    // value = p^{h(1-s)} * count
    double value = count * std::pow(static_cast<double>(p), h * (1.0 - s));
    out.level = h;
    out.value = value;
    if (have_prev && h >= min_level && std::abs(value - prev) < 1e-12) {
      out.stabilized = true;
      return out;
    }
    prev = value;
    have_prev = true;
  }
  return out;
}

SingularSeriesApprox singular_series(std::uint64_t n, int s, int k,
                                     std::uint64_t prime_cutoff, int h_max,
                                     std::uint64_t q_cutoff) {
  if (s < 1 || k < 1) throw std::invalid_argument("singular_series: s,k >= 1");
  SingularSeriesApprox out;
  out.n = n;
  out.s = s;
  out.k = k;
  out.prime_cutoff = prime_cutoff;
  out.s_below_recommended = s < std::max(4, k + 1);
  out.value = 1.0;
  for (u64 p : arith::primes_up_to(prime_cutoff)) {
    LocalDensity d = local_density(p, n, s, k, h_max);
    out.all_stabilized = out.all_stabilized && d.stabilized;
    out.value *= d.value;
    out.factors.push_back(d);
  }
  // independent truncation: sum over q of the complete-sum ratios
  double qsum = 0.0;
  for (u64 q = 1; q <= q_cutoff; ++q) {
    for (u64 a = q == 1 ? 0 : 1; a < std::max<u64>(q, 1); ++a) {
      if (q > 1 && std::gcd(a, q) != 1) continue;
      expsum::cplx ratio = expsum::complete_sum_S(q, a, k) / static_cast<double>(q);
      expsum::cplx term = std::pow(ratio, s);
      double frac =
          static_cast<double>((static_cast<u128>(n % q) * (q - a % q)) % q) /
          static_cast<double>(q);
      term *= expsum::unit_phase(frac);  // e(-n a / q)
      qsum += term.real();
      if (q == 1) break;
    }
  }
  out.alt_qsum = qsum;
  return out;
}

MainTerm main_term(std::uint64_t n, int s, int k, double series_value,
                   double eta) {
  if (series_value < 0)
    throw std::invalid_argument("main_term: series value must be >= 0");
  MainTerm out;
  out.n = n;
  out.s = s;
  out.k = k;
  out.series = series_value;
  double g1 = std::tgamma(1.0 + 1.0 / k);
  out.gamma_factor = std::pow(g1, s) / std::tgamma(static_cast<double>(s) / k);
  if (eta > 0.0)
    out.smooth_factor = std::pow(arith::dickman_rho(1.0 / eta), s);
  out.value = out.gamma_factor * out.smooth_factor * series_value *
              std::pow(static_cast<double>(n), static_cast<double>(s) / k - 1.0);
  return out;
}

}  // namespace cl::singular
