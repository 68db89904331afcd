#ifndef CIRCLELAB_EXPSUM_HPP
#define CIRCLELAB_EXPSUM_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arith.hpp"
#include "fitting.hpp"

namespace cl::expsum {

using cplx = std::complex<double>;

// e(z) = exp(2*pi*i*z), with the argument reduced mod 1 first.
cplx unit_phase(double z);

// frac(alpha * n) in [0,1), computed in extended precision; n is exact.
double frac_mul(double alpha, std::uint64_t n);

// f(alpha) = sum_{1<=x<=P} e(alpha x^k)
cplx weyl_sum_f(double alpha, double P, int k);

// h(alpha) = sum over the smooth set of e(alpha x^k)
cplx smooth_weyl_sum_h(double alpha, const arith::SmoothSet& set);

// S(q,a) = sum_{r=1}^q e(a r^k / q), computed with exact modular phases.
cplx complete_sum_S(std::uint64_t q, std::uint64_t a, int k);

// v(beta) = int_0^P e(beta gamma^k) dgamma, resolved below the local
// oscillation wavelength. Throws capacity_error when |beta| P^k is too large.
cplx oscillatory_v(double beta, double P, int k);

struct Arc {
  std::uint64_t q = 1;
  std::uint64_t a = 0;
  double halfwidth = 0.0;  // |alpha - a/q| <= Q P^{-k} / q
};

class ArcDissection {
public:
  // Major arcs M(Q): centers a/q with 0 <= a < q <= Q, gcd(a,q)=1, on the
  // torus [0,1). Requires 1 <= Q <= P^{k/2}/2.
  ArcDissection(double P, int k, double Q);

  double P() const { return P_; }
  int k() const { return k_; }
  double Q() const { return Q_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool overlapping() const { return overlapping_; }

  // Containing arc, if any. Overlaps resolve to the lowest denominator,
  // ties to the smaller numerator.
  std::optional<Arc> locate(double alpha) const;

private:
  double P_;
  int k_;
  double Q_;
  std::vector<Arc> arcs_;  // ordered by (q, a)
  bool overlapping_ = false;
};

struct MajorArcApproximant {
  bool on_major = false;
  std::uint64_t q = 1;
  std::uint64_t a = 0;
  cplx S_qa{0.0, 0.0};
  cplx v_beta{0.0, 0.0};
  cplx value{0.0, 0.0};  // q^{-1} S(q,a) v(alpha - a/q); 0 off the major arcs
};

MajorArcApproximant major_arc_approximant(double alpha, const ArcDissection& d);

// Mean of N uniform samples; exact for trigonometric polynomials of
// degree <= D when N > 2D. Throws std::invalid_argument when N <= 2*degree.
cplx torus_mean(std::uint64_t n_samples, std::uint64_t degree,
                const std::function<cplx(double)>& integrand);

struct MinorArcReport {
  double sup_abs = 0.0;        // at the largest ladder point
  double sup_alpha = 0.0;      // where it was attained
  double tau_hat = 0.0;        // 1 - fitted slope of log sup vs log P
  double tau_residual = 0.0;
  bool low_confidence = false;
  double delta_hat = 0.0;      // mean-value excess, when mean values supplied
  bool has_delta = false;
};

struct SurveyConfig {
  int k = 2;
  std::vector<double> P_ladder;     // >= 2 values for a fit
  double Q_exponent = 1.0;          // Q = min(P^Q_exponent, P^{k/2}/2)
  std::uint64_t grid_size = 1000;
  double smooth_theta = 0.0;        // > 0: survey h with R = ceil(P^theta)
  int t = 0;                        // pairs with mean_values for delta_hat
  std::vector<double> mean_values;  // optional S_t ladder, same length as P_ladder
};

// Grid search (plus golden-section refinement) for sup over the minor arcs,
// with a log-log fit across the P ladder.
MinorArcReport minor_arc_survey(const SurveyConfig& cfg);

}  // namespace cl::expsum

#endif
