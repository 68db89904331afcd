#include "exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"

namespace cl::exponents {

double xi_constant() { return (std::sqrt(2833.0) - 43.0) / 41.0; }

double solve_admissible_delta(double k, double t) {
  if (k < 2) throw std::invalid_argument("solve_admissible_delta: k >= 2 required");
  if (t <= 0) throw std::invalid_argument("solve_admissible_delta: t > 0 required");
  const double rhs = k * std::exp(1.0 - 2.0 * t / k);
  // g(D) = D e^{D/k} - rhs is increasing and convex on D > 0, so Newton from
  // the right converges monotonically.
  double d = std::clamp(rhs, 1e-12, k);
  for (int it = 0; it < 200; ++it) {
    double ex = std::exp(d / k);
    double g = d * ex - rhs;
    double gp = ex * (1.0 + d / k);
    double step = g / gp;
    d -= step;
    if (d <= 0) d = 1e-300;
    if (std::abs(step) < 1e-15 * (1.0 + d)) break;
  }
  return d;
}

double permissible_lambda_closed(double k, double t) {
  return 2.0 * t - k + k * std::exp(1.0 - 2.0 * t / k);
}

std::optional<double> associated_delta_quasidiagonal(double k, double t) {
  if (k < 3) return std::nullopt;
  double upper = 2.0 * std::sqrt(k) / std::numbers::e;
  if (!(t > 2.0 && t <= upper)) return std::nullopt;
  double e = std::numbers::e;
  return (4.0 * std::sqrt(k) / (e * t)) *
         std::exp(-4.0 * k / (e * e * t * t));
}

std::vector<double> iterate_differencing(double k, double delta0, int steps,
                                         PhiRule rule, double phi_fixed) {
  if (delta0 <= 0) throw std::invalid_argument("iterate_differencing: Delta_0 > 0");
  if (steps < 0) throw std::invalid_argument("iterate_differencing: steps >= 0");
  std::vector<double> seq{delta0};
  double d = delta0;
  for (int i = 0; i < steps; ++i) {
    double phi = rule == PhiRule::Adaptive ? 1.0 / (k + d) : phi_fixed;
    d = d * (1.0 - phi) + k * phi - 1.0;
    seq.push_back(d);
  }
  return seq;
}

ExponentRecord exponent_record(int k, double t) {
  ExponentRecord rec;
  rec.k = k;
  rec.t = t;
  rec.outside_corollary = k < 4;
  rec.delta_adm = solve_admissible_delta(k, t);
  rec.lambda = 2.0 * t - k + rec.delta_adm;
  rec.provenance = "differencing";
  if (t <= 2.0) {
    rec.delta_assoc = 0.0;
    if (t + 0.0 < rec.lambda) {
      rec.lambda = t;
      rec.provenance = "classical";
    }
  } else if (auto d = associated_delta_quasidiagonal(k, t)) {
    rec.delta_assoc = *d;
    if (t + *d < rec.lambda) {
      rec.lambda = t + *d;
      rec.provenance = "quasi-diagonal";
    }
  } else if (t == 3.0 && k >= 238607918) {
    rec.delta_assoc = 0.0;  // Heath-Brown, cubes of huge degree only
    if (t < rec.lambda) {
      rec.lambda = t;
      rec.provenance = "heath-brown";
    }
  }
  return rec;
}

SigmaResult sigma_of_k(int k, int s, int t, int w) {
  if (2 * s < k + 1) throw std::invalid_argument("sigma_of_k: need 2s >= k+1");
  SigmaResult r;
  r.k = k;
  r.s = s;
  r.t = t;
  r.w = w;
  r.delta_s = solve_admissible_delta(k, s);
  r.delta_t = solve_admissible_delta(k, t);
  r.delta_w = solve_admissible_delta(k, w);
  double num = k - r.delta_t - r.delta_s * r.delta_w;
  double den = 2.0 * (s * (k + r.delta_w - r.delta_t) + t * w * (1.0 + r.delta_s));
  r.feasible = num > 0 && den > 0;
  r.sigma = r.feasible ? num / den : 0.0;
  return r;
}

SigmaResult optimize_sigma(int k, int s_max, int t_max, int w_max) {
  if (s_max < 1 || t_max < 1 || w_max < 1)
    throw std::invalid_argument("optimize_sigma: empty ranges");
  auto delta = [&](int j) { return solve_admissible_delta(k, j); };
  int top = std::max({s_max, t_max, w_max});
  std::vector<double> dd(top + 1, 0.0);
  for (int j = 1; j <= top; ++j) dd[j] = delta(j);
  SigmaResult best;
  best.k = k;
  int s_lo = (k + 2) / 2;  // smallest s with 2s >= k+1
  for (int s = s_lo; s <= s_max; ++s) {
    for (int t = 1; t <= t_max; ++t) {
      double num_t = k - dd[t];
      for (int w = 1; w <= w_max; ++w) {
        double num = num_t - dd[s] * dd[w];
        if (num <= 0) continue;
        double den = 2.0 * (s * (k + dd[w] - dd[t]) + t * static_cast<double>(w) * (1.0 + dd[s]));
        double sigma = num / den;
        if (sigma > best.sigma) {
          best.s = s;
          best.t = t;
          best.w = w;
          best.sigma = sigma;
          best.feasible = true;
        }
      }
    }
  }
  if (!best.feasible) throw infeasible_error("optimize_sigma: no feasible triple");
  best.delta_s = dd[best.s];
  best.delta_t = dd[best.t];
  best.delta_w = dd[best.w];
  return best;
}

GBoundResult g_bound_recipe(int k, double A) {
  if (k < 3) throw std::domain_error("g_bound_recipe: k >= 3 required");
  if (A <= 0) throw std::invalid_argument("g_bound_recipe: A > 0 required");
  GBoundResult r;
  r.k = k;
  r.A = A;
  double lk = std::log(static_cast<double>(k));
  double llk = std::log(lk);
  r.t_choice = static_cast<long long>(std::floor(0.5 * k * (lk + llk + 1.0)));
  r.s_choice = 2 * r.t_choice + k +
               static_cast<long long>(std::floor(A * k * llk / lk));
  r.main_term = k * (lk + llk + 2.0);
  return r;
}

const std::vector<GTableEntry>& reference_g_table() {
  static const std::vector<GTableEntry> table = {
      {3, 7, false, "Linnik"},
      {4, 12, true, "Vaughan"},  // G#(4): congruence conditions mod 16
      {5, 17, false, "Vaughan-Wooley"},
      {6, 24, false, "Vaughan-Wooley"},
      {7, 33, false, "Vaughan-Wooley"},
      {8, 42, false, "Vaughan-Wooley"},
      {9, 50, false, "Vaughan-Wooley"},
      {10, 59, false, "Vaughan-Wooley"},
      {11, 67, false, "Vaughan-Wooley"},
      {12, 76, false, "Vaughan-Wooley"},
      {13, 84, false, "Vaughan-Wooley"},
      {14, 92, false, "Vaughan-Wooley"},
      {15, 100, false, "Vaughan-Wooley"},
      {16, 109, false, "Vaughan-Wooley"},
      {17, 117, false, "Vaughan-Wooley"},
      {18, 125, false, "Vaughan-Wooley"},
      {19, 134, false, "Vaughan-Wooley"},
      {20, 142, false, "Vaughan-Wooley"},
  };
  return table;
}

}  // namespace cl::exponents
