#ifndef CIRCLELAB_EXPONENTS_HPP
#define CIRCLELAB_EXPONENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cl::exponents {

// xi = (sqrt(2833) - 43) / 41, the cube exponent constant.
double xi_constant();

// Positive root of Delta e^{Delta/k} = k e^{1-2t/k} (Newton; equivalently
// k * W(e^{1-2t/k}) with W the principal Lambert branch). t may be fractional.
double solve_admissible_delta(double k, double t);

// lambda_t = 2t - k + k e^{1-2t/k}
double permissible_lambda_closed(double k, double t);

// delta_t = (4 sqrt(k) / (e t)) exp(-4k / (e^2 t^2)), valid for k >= 3 and
// 2 < t <= 2 sqrt(k)/e; nullopt outside that range.
std::optional<double> associated_delta_quasidiagonal(double k, double t);

enum class PhiRule { Fixed, Adaptive };  // adaptive: phi = 1/(k + Delta_s)

// Delta_{s+1} = Delta_s (1 - phi) + k phi - 1; returns Delta_0..Delta_steps.
std::vector<double> iterate_differencing(double k, double delta0, int steps,
                                         PhiRule rule, double phi_fixed = 0.0);

struct ExponentRecord {
  int k = 0;
  double t = 0;
  double delta_adm = 0;                // admissible Delta_t
  std::optional<double> delta_assoc;   // associated delta_t, when available
  double lambda = 0;                   // min over the available formulas
  std::string provenance;
  bool outside_corollary = false;      // k < 4 for the closed-form equation
};

// lambda_t = min over validity-checked formulas: t + delta (classical t <= 2,
// quasi-diagonal range, Heath-Brown t=3 for huge k) and 2t - k + Delta_t.
ExponentRecord exponent_record(int k, double t);

struct SigmaResult {
  int k = 0;
  int s = 0, t = 0, w = 0;
  double delta_s = 0, delta_t = 0, delta_w = 0;
  double sigma = 0;
  bool feasible = false;
};

// sigma(k) = (k - Delta_t - Delta_s Delta_w) /
//            (2 (s (k + Delta_w - Delta_t) + t w (1 + Delta_s))),
// with the side condition 2s >= k+1. Infeasible when the numerator is <= 0.
SigmaResult sigma_of_k(int k, int s, int t, int w);

// Exhaustive search over integer triples with s,t,w in [1, bound] subject to
// 2s >= k+1; ties broken lexicographically on (s, t, w).
SigmaResult optimize_sigma(int k, int s_max, int t_max, int w_max);

struct GBoundResult {
  int k = 0;
  double A = 1.0;
  long long t_choice = 0;  // [k (log k + log log k + 1) / 2]
  long long s_choice = 0;  // 2t + k + [A k log log k / log k]
  double main_term = 0;    // k (log k + log log k + 2)
};

GBoundResult g_bound_recipe(int k, double A);

struct GTableEntry {
  int k;
  int bound;
  bool congruence_conditions;  // the G#(4) caveat
  const char* citation;
};

// The published G(k) bounds, reference data only.
const std::vector<GTableEntry>& reference_g_table();

}  // namespace cl::exponents

#endif
