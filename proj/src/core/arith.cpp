#include "arith.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "errors.hpp"

namespace cl {

std::size_t table_ceiling() {
  static std::size_t ceiling = [] {
    if (const char* env = std::getenv("CIRCLELAB_MAX_TABLE")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(100000000);  // 10^8
  }();
  return ceiling;
}

}  // namespace cl

namespace cl::arith {

double SmoothParams::eta() const {
  return std::log(static_cast<double>(R)) / std::log(static_cast<double>(P));
}

void SmoothParams::validate() const {
  if (R < 2 || R > P) throw std::invalid_argument("require 2 <= R <= P");
  if (k < 1) throw std::invalid_argument("require k >= 1");
}

SmoothSet enumerate_smooth(const SmoothParams& params) {
  params.validate();
  if (params.P > table_ceiling())
    throw capacity_error("smooth enumeration bound exceeds table ceiling");
  const std::uint64_t P = params.P, R = params.R;
  // Sieve of largest-surviving-cofactor: divide out all primes <= R, an entry
  // is smooth iff its cofactor reduces to 1.
  std::vector<std::uint32_t> cof(P + 1);
  for (std::uint64_t i = 1; i <= P; ++i) cof[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t p = 2; p <= R && p <= P; ++p) {
    if (cof[p] == p) {  // p has no prime factor < p, so p is prime
      for (std::uint64_t m = p; m <= P; m += p)
        while (cof[m] % p == 0) cof[m] /= static_cast<std::uint32_t>(p);
    }
  }
  SmoothSet out;
  out.params = params;
  for (std::uint64_t x = 1; x <= P; ++x)
    if (cof[x] == 1) out.elements.push_back(x);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> comp(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!comp[p]) {
      primes.push_back(p);
      for (std::uint64_t m = p * p; m <= n; m += p) comp[m] = true;
    }
  }
  return primes;
}

bool prime_power_split(std::uint64_t p_h, std::uint64_t& p, int& h) {
  if (p_h < 2) return false;
  // smallest prime factor by trial division
  std::uint64_t q = 0;
  for (std::uint64_t d = 2; d * d <= p_h; ++d) {
    if (p_h % d == 0) {
      q = d;
      break;
    }
  }
  if (q == 0) {
    p = p_h;
    h = 1;
    return true;
  }
  std::uint64_t rest = p_h;
  int e = 0;
  while (rest % q == 0) {
    rest /= q;
    ++e;
  }
  if (rest != 1) return false;
  p = q;
  h = e;
  return true;
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t k, std::uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 acc = 1, base = x % m;
  while (k > 0) {
    if (k & 1) acc = (acc * base) % m;
    base = (base * base) % m;
    k >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::uint64_t> power_residue_table(std::uint64_t p_h, int k) {
  std::uint64_t p;
  int h;
  if (!prime_power_split(p_h, p, h))
    throw std::invalid_argument("modulus is not a prime power");
  if (p_h > table_ceiling()) throw capacity_error("prime power exceeds ceiling");
  if (k < 1) throw std::invalid_argument("require k >= 1");
  std::vector<std::uint64_t> t(p_h, 0);
  for (std::uint64_t x = 0; x < p_h; ++x) ++t[pow_mod(x, static_cast<std::uint64_t>(k), p_h)];
  return t;
}

namespace {

// rho on a uniform grid of step kStep, filled lazily out to the requested u.
// Integral form: rho(u) = rho(v) - int_v^u rho(t-1)/t dt, trapezoid on the grid.
constexpr double kStep = 1e-4;

class DickmanTable {
public:
  double value(double u) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(u);
    return interp(u);
  }

private:
  void extend(double u) {
    std::size_t need = static_cast<std::size_t>(std::ceil(u / kStep)) + 2;
    if (grid_.empty()) {
      // seed through u = 2 with the closed forms
      std::size_t n2 = static_cast<std::size_t>(std::llround(2.0 / kStep));
      grid_.resize(n2 + 1);
      for (std::size_t i = 0; i <= n2; ++i) {
        double t = i * kStep;
        grid_[i] = (t <= 1.0) ? 1.0 : 1.0 - std::log(t);
      }
    }
    while (grid_.size() < need) {
      std::size_t i = grid_.size();
      double u0 = (i - 1) * kStep, u1 = i * kStep;
      double f0 = interp_raw(u0 - 1.0) / u0;
      double f1 = interp_raw(u1 - 1.0) / u1;
      grid_.push_back(grid_.back() - 0.5 * kStep * (f0 + f1));
    }
  }

  double interp_raw(double u) const {
    if (u <= 0.0) return 1.0;
    std::size_t i = static_cast<std::size_t>(u / kStep);
    if (i + 1 >= grid_.size()) return grid_.back();
    double frac = u / kStep - i;
    return grid_[i] * (1.0 - frac) + grid_[i + 1] * frac;
  }

  double interp(double u) const { return interp_raw(u); }

  std::mutex mu_;
  std::vector<double> grid_;
};

}  // namespace

double dickman_rho(double u) {
  if (u < 0.0) throw std::domain_error("dickman_rho: u < 0");
  if (u <= 1.0) return 1.0;
  if (u <= 2.0) return 1.0 - std::log(u);
  static DickmanTable table;
  return table.value(u);
}

}  // namespace cl::arith
