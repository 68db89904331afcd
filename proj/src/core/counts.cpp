#include "counts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"
#include "fitting.hpp"

namespace cl::counts {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 checked_narrow(u128 v, const char* what) {
  if (v > std::numeric_limits<u64>::max()) throw capacity_error(what);
  return static_cast<u64>(v);
}

i128 eval_poly(const std::vector<long long>& coeffs, i128 z) {
  i128 acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

std::vector<long long> formal_derivative(const std::vector<long long>& coeffs) {
  std::vector<long long> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    d.push_back(coeffs[i] * static_cast<long long>(i));
  if (d.empty()) d.push_back(0);
  return d;
}

// D(v) = #{(x-tuple, y-tuple): sum x^k - sum y^k = v}, from the t-fold table.
u64 difference_count(const RepTable& r, u64 v) {
  u128 acc = 0;
  for (u64 m = 0; m + v < r.table.size(); ++m)
    acc += static_cast<u128>(r.table[m]) * r.table[m + v];
  return checked_narrow(acc, "difference count overflow");
}

std::vector<u64> smooth_elements(double bound, u64 R, int k) {
  auto P = static_cast<u64>(std::floor(bound));
  if (P < 1) return {};
  if (P == 1) return {1};
  arith::SmoothParams sp;
  sp.P = P;
  sp.R = std::min(std::max<u64>(R, 2), P);
  sp.k = k;
  return arith::enumerate_smooth(sp).elements;
}

}  // namespace

std::vector<u64> full_range_source(double P) {
  std::vector<u64> xs;
  auto n = static_cast<u64>(std::floor(P));
  xs.reserve(n);
  for (u64 x = 1; x <= n; ++x) xs.push_back(x);
  return xs;
}

std::vector<u64> kth_powers(const std::vector<u64>& xs, int k) {
  std::vector<u64> out;
  out.reserve(xs.size());
  for (u64 x : xs) {
    u128 p = 1;
    for (int i = 0; i < k; ++i) {
      p *= x;
      if (p > std::numeric_limits<u64>::max())
        throw capacity_error("k-th power overflows 64 bits");
    }
    out.push_back(static_cast<u64>(p));
  }
  return out;
}

RepTable rep_table(int k, int t, const std::vector<u64>& xs, u64 limit) {
  if (t < 1) throw std::invalid_argument("rep_table: t >= 1");
  if (xs.empty()) throw std::invalid_argument("rep_table: empty source");
  RepTable r;
  r.k = k;
  r.t = t;
  r.powers = kth_powers(xs, k);
  u128 natural = static_cast<u128>(r.powers.back()) * t;
  u64 lim = limit ? limit : checked_narrow(natural, "rep table span overflow");
  if (lim + 1 > table_ceiling())
    throw capacity_error("rep table exceeds configured ceiling");
  std::vector<u64> cur(lim + 1, 0);
  for (u64 p : r.powers)
    if (p <= lim) ++cur[p];
  for (int step = 1; step < t; ++step) {
    std::vector<u64> next(lim + 1, 0);
    for (u64 m = 0; m <= lim; ++m) {
      if (cur[m] == 0) continue;
      for (u64 p : r.powers) {  // ascending, so the break is safe
        if (p > lim - m) break;
        u64 prev = next[m + p];
        next[m + p] = prev + cur[m];
        if (next[m + p] < prev) throw capacity_error("rep count overflow");
      }
    }
    cur.swap(next);
  }
  r.table = std::move(cur);
  return r;
}

std::uint64_t mean_value_S_source(int k, int t, const std::vector<u64>& xs) {
  RepTable r = rep_table(k, t, xs);
  u128 acc = 0;
  for (u64 c : r.table) acc += static_cast<u128>(c) * c;
  return checked_narrow(acc, "mean value overflow");
}

std::uint64_t mean_value_S(int k, int t, const arith::SmoothParams& params) {
  arith::SmoothParams p = params;
  p.k = k;
  return mean_value_S_source(k, t, arith::enumerate_smooth(p).elements);
}

std::uint64_t count_R(std::uint64_t n, int s, int k) {
  auto P = static_cast<u64>(std::floor(std::pow(static_cast<double>(n), 1.0 / k)));
  while (true) {  // fix floating point at the edge
    u128 pk = 1;
    for (int i = 0; i < k; ++i) pk *= (P + 1);
    if (pk <= n) ++P; else break;
  }
  return count_R_source(n, s, k, full_range_source(static_cast<double>(P)));
}

std::uint64_t count_R_source(std::uint64_t n, int s, int k,
                             const std::vector<u64>& xs) {
  if (xs.empty()) return 0;
  std::vector<u64> trimmed;
  for (u64 x : xs) {
    u128 p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    if (p <= n) trimmed.push_back(x);
  }
  if (trimmed.empty()) return 0;
  RepTable r = rep_table(k, s, trimmed, n);
  return r.at(n);
}

std::uint64_t count_three_cubes(std::uint64_t X) {
  if (X + 1 > table_ceiling()) throw capacity_error("three-cubes bound exceeds ceiling");
  std::vector<bool> hit(X + 1, false);
  u64 count = 0;
  for (u64 a = 1; 3 * a * a * a <= X; ++a) {
    u64 a3 = a * a * a;
    for (u64 b = a; a3 + 2 * b * b * b <= X; ++b) {
      u64 ab = a3 + b * b * b;
      for (u64 c = b; ab + c * c * c <= X; ++c) {
        u64 v = ab + c * c * c;
        if (!hit[v]) {
          hit[v] = true;
          ++count;
        }
      }
    }
  }
  return count;
}

std::vector<std::uint64_t> exceptional_set(std::uint64_t N, int s, int k,
                                           const std::vector<u64>& xs) {
  std::vector<u64> trimmed;
  for (u64 x : xs) {
    u128 p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    if (p <= N) trimmed.push_back(x);
  }
  std::vector<u64> members;
  if (trimmed.empty()) {
    for (u64 n = N / 2 + 1; n <= N; ++n) members.push_back(n);
    return members;
  }
  RepTable r = rep_table(k, s, trimmed, N);
  for (u64 n = N / 2 + 1; n <= N; ++n)
    if (r.at(n) == 0) members.push_back(n);
  return members;
}

MomentReport K_moments_basic(const std::vector<u64>& members) {
  MomentReport out;
  out.second_moment = members.size();
  if (members.empty()) return out;
  u64 lo = members.front(), hi = members.back();
  std::vector<u64> sums(2 * (hi - lo) + 1, 0);
  for (u64 a : members)
    for (u64 b : members) ++sums[(a - lo) + (b - lo)];
  u128 energy = 0;
  for (u64 c : sums) energy += static_cast<u128>(c) * c;
  out.fourth_moment = checked_narrow(energy, "additive energy overflow");
  return out;
}

MomentReport K_moments(const std::vector<u64>& members, int t,
                       const arith::SmoothParams& h_params) {
  MomentReport out = K_moments_basic(members);
  if (t <= 0 || members.empty()) return out;
  RepTable r = rep_table(h_params.k, t, arith::enumerate_smooth(h_params).elements);
  // g(m) = sum_{n in Z} r_t(m - n); mixed moment = sum_m g(m)^2
  u64 hi = members.back();
  u128 span = static_cast<u128>(r.table.size() - 1) + hi;
  if (span + 1 > table_ceiling()) throw capacity_error("mixed moment span exceeds ceiling");
  std::vector<u64> g(static_cast<std::size_t>(span) + 1, 0);
  for (u64 m = 0; m < r.table.size(); ++m) {
    if (r.table[m] == 0) continue;
    for (u64 n : members) g[m + n] += r.table[m];
  }
  u128 acc = 0;
  for (u64 c : g) acc += static_cast<u128>(c) * c;
  out.mixed_moment = checked_narrow(acc, "mixed moment overflow");
  out.has_mixed = true;
  return out;
}

std::uint64_t count_eq_2_3(const DifferencingConfig& cfg) {
  if (cfg.psi.size() < 3) throw std::invalid_argument("psi must have degree >= 2");
  std::vector<u64> xs = smooth_elements(cfg.T, cfg.R, cfg.k);
  if (cfg.x_above_M) {
    std::erase_if(xs, [&](u64 x) { return static_cast<double>(x) <= cfg.M; });
  }
  if (xs.empty()) return 0;
  RepTable r = rep_table(cfg.k, cfg.s, xs);
  auto P = static_cast<long long>(std::floor(cfg.P));
  u128 total = 0;
  for (long long z = 1; z <= P; ++z) {
    for (long long w = 1; w <= P; ++w) {
      i128 d = eval_poly(cfg.psi, z) - eval_poly(cfg.psi, w);
      u64 v = d < 0 ? static_cast<u64>(-d) : static_cast<u64>(d);
      if (v >= r.table.size()) continue;
      total += difference_count(r, v);
    }
  }
  return checked_narrow(total, "count_eq_2_3 overflow");
}

std::uint64_t count_eq_2_4(const DifferencingConfig& cfg) {
  if (cfg.psi.size() < 3) throw std::invalid_argument("psi must have degree >= 2");
  if (cfg.M > cfg.T) throw std::invalid_argument("require M <= T");
  double inner = cfg.T / std::max(cfg.M, 1.0);
  if (inner < 1.0) return 0;
  std::vector<u64> us = smooth_elements(inner, cfg.R, cfg.k);
  if (us.empty()) return 0;
  RepTable r = rep_table(cfg.k, cfg.s, us);
  std::vector<long long> dpsi = formal_derivative(cfg.psi);
  auto P = static_cast<long long>(std::floor(cfg.P));
  auto m_lo = static_cast<u64>(std::floor(cfg.M));
  auto m_hi = static_cast<u64>(std::floor(cfg.M * static_cast<double>(cfg.R)));
  u128 total = 0;
  for (u64 m = m_lo + 1; m <= m_hi; ++m) {
    i128 mk = 1;
    for (int i = 0; i < cfg.k; ++i) mk *= static_cast<i128>(m);
    for (long long z = 1; z <= P; ++z) {
      i128 dz = eval_poly(dpsi, z);
      i128 dzm = dz % static_cast<i128>(m);
      if (dzm < 0) dzm += m;
      for (long long w = 1; w <= P; ++w) {
        i128 dw = eval_poly(dpsi, w);
        i128 dwm = dw % static_cast<i128>(m);
        if (dwm < 0) dwm += m;
        u64 prod = static_cast<u64>((static_cast<u128>(dzm) * static_cast<u64>(dwm)) %
                                    m);
        if (std::gcd(prod, m) != 1) continue;  // psi'(z) == 0 lands here too
        if (cfg.refine_congruence && (z - w) % static_cast<long long>(mk) != 0)
          continue;
        i128 d = eval_poly(cfg.psi, z) - eval_poly(cfg.psi, w);
        if (d % mk != 0) continue;
        i128 q = d / mk;
        u64 v = q < 0 ? static_cast<u64>(-q) : static_cast<u64>(q);
        if (v >= r.table.size()) continue;
        total += difference_count(r, v);
      }
    }
  }
  return checked_narrow(total, "count_eq_2_4 overflow");
}

std::vector<long long> difference_polynomial(const std::vector<long long>& psi,
                                             long long h, long long m, int k) {
  if (psi.size() < 2) throw std::invalid_argument("psi must have degree >= 1");
  if (m == 0) throw std::invalid_argument("m must be nonzero");
  i128 mk = 1;
  for (int i = 0; i < k; ++i) mk *= static_cast<i128>(m);
  i128 c = static_cast<i128>(h) * mk;  // shift psi(z + h m^k)
  const std::size_t d = psi.size() - 1;
  // binomial table up to degree d
  std::vector<std::vector<i128>> ch(d + 1, std::vector<i128>(d + 1, 0));
  for (std::size_t i = 0; i <= d; ++i) {
    ch[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j)
      ch[i][j] = ch[i - 1][j - 1] + (j <= i - 1 ? ch[i - 1][j] : 0);
  }
  std::vector<long long> out(d, 0);  // degree d-1
  for (std::size_t j = 0; j < d; ++j) {
    i128 acc = 0;
    for (std::size_t i = j + 1; i <= d; ++i) {
      i128 cpow = 1;
      for (std::size_t e = 0; e < i - j; ++e) cpow *= c;
      acc += static_cast<i128>(psi[i]) * ch[i][j] * cpow;
    }
    if (acc % mk != 0)
      throw std::logic_error("difference polynomial: non-integral coefficient");
    i128 coeff = acc / mk;
    if (coeff > std::numeric_limits<long long>::max() ||
        coeff < std::numeric_limits<long long>::min())
      throw capacity_error("difference polynomial coefficient overflow");
    out[j] = static_cast<long long>(coeff);
  }
  return out;
}

LambdaFit fit_permissible_exponent(int k, int t, const std::vector<double>& P_ladder,
                                   double theta) {
  if (P_ladder.size() < 4)
    throw std::invalid_argument("fit_permissible_exponent: need a ladder of >= 4 sizes");
  LambdaFit out;
  std::vector<double> ys;
  for (double P : P_ladder) {
    arith::SmoothParams sp;
    sp.P = static_cast<u64>(std::floor(P));
    sp.R = theta >= 1.0
               ? sp.P
               : std::max<u64>(2, static_cast<u64>(std::ceil(std::pow(P, theta))));
    sp.k = k;
    u64 s = mean_value_S(k, t, sp);
    out.counts.push_back(s);
    ys.push_back(static_cast<double>(s));
  }
  auto f = fit::loglog_fit(P_ladder, ys);
  out.lambda_hat = f.slope;
  out.residual = f.residual;
  out.low_confidence = f.low_confidence();
  return out;
}

}  // namespace cl::counts
