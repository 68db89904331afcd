#include "circlelab.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "core/arith.hpp"
#include "core/counts.hpp"
#include "core/errors.hpp"
#include "core/exponents.hpp"
#include "core/expsum.hpp"
#include "core/singular.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
cl_status guard(Fn&& fn) {
  try {
    fn();
    return CL_OK;
  } catch (const cl::capacity_error& e) {
    g_last_error = e.what();
    return CL_ERR_CAPACITY;
  } catch (const cl::infeasible_error& e) {
    g_last_error = e.what();
    return CL_ERR_INFEASIBLE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CL_ERR_USAGE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return CL_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return CL_ERR_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CL_ERR_INTERNAL;
  }
}

cl_complex to_c(cl::expsum::cplx z) { return {z.real(), z.imag()}; }

}  // namespace

struct cl_smooth_set {
  cl::arith::SmoothSet set;
};

struct cl_dissection {
  cl::expsum::ArcDissection d;
};

struct cl_exceptional_set {
  std::vector<uint64_t> members;
};

struct cl_singular_series {
  cl::singular::SingularSeriesApprox approx;
};

extern "C" {

const char* cl_last_error(void) { return g_last_error.c_str(); }

cl_status cl_smooth_set_new(uint64_t P, uint64_t R, int k, cl_smooth_set** out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    cl::arith::SmoothParams params{P, R, k};
    *out = new cl_smooth_set{cl::arith::enumerate_smooth(params)};
  });
}

void cl_smooth_set_free(cl_smooth_set* set) { delete set; }

uint64_t cl_smooth_set_card(const cl_smooth_set* set) {
  return set ? set->set.card() : 0;
}

uint64_t cl_smooth_set_elem(const cl_smooth_set* set, uint64_t index) {
  if (!set || index >= set->set.elements.size()) return 0;
  return set->set.elements[index];
}

double cl_smooth_set_eta(const cl_smooth_set* set) {
  return set ? set->set.params.eta() : 0.0;
}

cl_status cl_dickman_rho(double u, double* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = cl::arith::dickman_rho(u); });
}

cl_status cl_power_residue_table(uint64_t p_h, int k, uint64_t* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    auto t = cl::arith::power_residue_table(p_h, k);
    std::memcpy(out, t.data(), t.size() * sizeof(uint64_t));
  });
}

cl_status cl_weyl_sum_f(double alpha, double P, int k, cl_complex* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = to_c(cl::expsum::weyl_sum_f(alpha, P, k)); });
}

cl_status cl_smooth_weyl_sum_h(const cl_smooth_set* set, double alpha,
                               cl_complex* out) {
  if (!set || !out) return CL_ERR_USAGE;
  return guard([&] { *out = to_c(cl::expsum::smooth_weyl_sum_h(alpha, set->set)); });
}

cl_status cl_complete_sum_S(uint64_t q, uint64_t a, int k, cl_complex* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = to_c(cl::expsum::complete_sum_S(q, a, k)); });
}

cl_status cl_oscillatory_v(double beta, double P, int k, cl_complex* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = to_c(cl::expsum::oscillatory_v(beta, P, k)); });
}

cl_status cl_dissection_new(double P, int k, double Q, cl_dissection** out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = new cl_dissection{cl::expsum::ArcDissection(P, k, Q)}; });
}

void cl_dissection_free(cl_dissection* d) { delete d; }

uint64_t cl_dissection_arc_count(const cl_dissection* d) {
  return d ? d->d.arcs().size() : 0;
}

cl_status cl_dissection_arc(const cl_dissection* d, uint64_t index, uint64_t* q,
                            uint64_t* a, double* halfwidth) {
  if (!d || index >= d->d.arcs().size()) return CL_ERR_USAGE;
  const auto& arc = d->d.arcs()[index];
  if (q) *q = arc.q;
  if (a) *a = arc.a;
  if (halfwidth) *halfwidth = arc.halfwidth;
  return CL_OK;
}

int cl_dissection_overlapping(const cl_dissection* d) {
  return d && d->d.overlapping() ? 1 : 0;
}

cl_status cl_major_arc_approximant(const cl_dissection* d, double alpha,
                                   cl_major_approx* out) {
  if (!d || !out) return CL_ERR_USAGE;
  return guard([&] {
    auto r = cl::expsum::major_arc_approximant(alpha, d->d);
    out->on_major = r.on_major ? 1 : 0;
    out->q = r.q;
    out->a = r.a;
    out->S_qa = to_c(r.S_qa);
    out->v_beta = to_c(r.v_beta);
    out->value = to_c(r.value);
  });
}

cl_status cl_minor_arc_survey(int k, const double* P_ladder, int ladder_len,
                              double Q_exponent, uint64_t grid_size,
                              double smooth_theta, cl_minor_report* out) {
  if (!P_ladder || ladder_len < 1 || !out) return CL_ERR_USAGE;
  return guard([&] {
    cl::expsum::SurveyConfig cfg;
    cfg.k = k;
    cfg.P_ladder.assign(P_ladder, P_ladder + ladder_len);
    cfg.Q_exponent = Q_exponent;
    cfg.grid_size = grid_size;
    cfg.smooth_theta = smooth_theta;
    auto r = cl::expsum::minor_arc_survey(cfg);
    out->sup_abs = r.sup_abs;
    out->sup_alpha = r.sup_alpha;
    out->tau_hat = r.tau_hat;
    out->tau_residual = r.tau_residual;
    out->low_confidence = r.low_confidence ? 1 : 0;
    out->delta_hat = r.delta_hat;
    out->has_delta = r.has_delta ? 1 : 0;
  });
}

cl_status cl_mean_value_S(int k, int t, uint64_t P, uint64_t R, uint64_t* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    cl::arith::SmoothParams params{P, R, k};
    *out = cl::counts::mean_value_S(k, t, params);
  });
}

cl_status cl_fit_lambda(int k, int t, const double* P_ladder, int ladder_len,
                        double theta, cl_lambda_fit* out, uint64_t* counts) {
  if (!P_ladder || ladder_len < 1 || !out) return CL_ERR_USAGE;
  return guard([&] {
    std::vector<double> ladder(P_ladder, P_ladder + ladder_len);
    auto r = cl::counts::fit_permissible_exponent(k, t, ladder, theta);
    out->lambda_hat = r.lambda_hat;
    out->residual = r.residual;
    out->low_confidence = r.low_confidence ? 1 : 0;
    if (counts)
      std::memcpy(counts, r.counts.data(), r.counts.size() * sizeof(uint64_t));
  });
}

cl_status cl_count_R(uint64_t n, int s, int k, uint64_t smooth_R, uint64_t* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    if (smooth_R == 0) {
      *out = cl::counts::count_R(n, s, k);
    } else {
      double P = std::pow(static_cast<double>(n), 1.0 / k);
      cl::arith::SmoothParams params{
          static_cast<uint64_t>(std::floor(P)) + 1, smooth_R, k};
      auto xs = cl::arith::enumerate_smooth(params).elements;
      *out = cl::counts::count_R_source(n, s, k, xs);
    }
  });
}

cl_status cl_count_three_cubes(uint64_t X, uint64_t* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = cl::counts::count_three_cubes(X); });
}

cl_status cl_exceptional_set_new(uint64_t N, int s, int k, uint64_t smooth_R,
                                 cl_exceptional_set** out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    double P = std::pow(static_cast<double>(N), 1.0 / k);
    auto Pn = static_cast<uint64_t>(std::floor(P)) + 1;
    std::vector<uint64_t> xs;
    if (smooth_R == 0) {
      xs = cl::counts::full_range_source(static_cast<double>(Pn));
    } else {
      cl::arith::SmoothParams params{Pn, std::min(smooth_R, Pn), k};
      xs = cl::arith::enumerate_smooth(params).elements;
    }
    *out = new cl_exceptional_set{cl::counts::exceptional_set(N, s, k, xs)};
  });
}

void cl_exceptional_set_free(cl_exceptional_set* set) { delete set; }

uint64_t cl_exceptional_set_card(const cl_exceptional_set* set) {
  return set ? set->members.size() : 0;
}

uint64_t cl_exceptional_set_elem(const cl_exceptional_set* set, uint64_t index) {
  if (!set || index >= set->members.size()) return 0;
  return set->members[index];
}

cl_status cl_k_moments(const uint64_t* members, uint64_t count, int t,
                       uint64_t hP, uint64_t hR, int hk, cl_moment_report* out) {
  if (!members || !out) return CL_ERR_USAGE;
  return guard([&] {
    std::vector<uint64_t> z(members, members + count);
    std::sort(z.begin(), z.end());
    cl::counts::MomentReport r;
    if (t > 0) {
      cl::arith::SmoothParams params{hP, hR, hk};
      r = cl::counts::K_moments(z, t, params);
    } else {
      r = cl::counts::K_moments_basic(z);
    }
    out->second_moment = r.second_moment;
    out->fourth_moment = r.fourth_moment;
    out->mixed_moment = r.mixed_moment;
    out->has_mixed = r.has_mixed ? 1 : 0;
  });
}

namespace {
cl::counts::DifferencingConfig convert(const cl_diff_config* cfg) {
  cl::counts::DifferencingConfig c;
  c.psi.assign(cfg->psi, cfg->psi + cfg->psi_len);
  c.P = cfg->P;
  c.T = cfg->T;
  c.M = cfg->M;
  c.R = cfg->R;
  c.s = cfg->s;
  c.k = cfg->k;
  c.x_above_M = cfg->x_above_M != 0;
  c.refine_congruence = cfg->refine_congruence != 0;
  return c;
}
}  // namespace

cl_status cl_count_eq_2_3(const cl_diff_config* cfg, uint64_t* out) {
  if (!cfg || !cfg->psi || cfg->psi_len < 3 || !out) return CL_ERR_USAGE;
  return guard([&] { *out = cl::counts::count_eq_2_3(convert(cfg)); });
}

cl_status cl_count_eq_2_4(const cl_diff_config* cfg, uint64_t* out) {
  if (!cfg || !cfg->psi || cfg->psi_len < 3 || !out) return CL_ERR_USAGE;
  return guard([&] { *out = cl::counts::count_eq_2_4(convert(cfg)); });
}

cl_status cl_difference_polynomial(const int64_t* psi, int psi_len, int64_t h,
                                   int64_t m, int k, int64_t* out) {
  if (!psi || psi_len < 2 || !out) return CL_ERR_USAGE;
  return guard([&] {
    std::vector<long long> coeffs(psi, psi + psi_len);
    auto r = cl::counts::difference_polynomial(coeffs, h, m, k);
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  });
}

double cl_xi_constant(void) { return cl::exponents::xi_constant(); }

cl_status cl_solve_admissible_delta(double k, double t, double* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = cl::exponents::solve_admissible_delta(k, t); });
}

cl_status cl_permissible_lambda_closed(double k, double t, double* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { *out = cl::exponents::permissible_lambda_closed(k, t); });
}

cl_status cl_associated_delta_quasidiag(double k, double t, double* out) {
  if (!out) return CL_ERR_USAGE;
  auto v = cl::exponents::associated_delta_quasidiagonal(k, t);
  if (!v) {
    g_last_error = "outside the quasi-diagonal range 2 < t <= 2 sqrt(k)/e";
    return CL_ERR_INFEASIBLE;
  }
  *out = *v;
  return CL_OK;
}

cl_status cl_iterate_differencing(double k, double delta0, int steps, double phi,
                                  double* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    auto rule = phi < 0 ? cl::exponents::PhiRule::Adaptive
                        : cl::exponents::PhiRule::Fixed;
    auto seq = cl::exponents::iterate_differencing(k, delta0, steps, rule,
                                                   phi < 0 ? 0.0 : phi);
    for (std::size_t i = 0; i < seq.size(); ++i) out[i] = seq[i];
  });
}

cl_status cl_exponent_record_get(int k, double t, cl_exponent_record* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    auto r = cl::exponents::exponent_record(k, t);
    out->delta_adm = r.delta_adm;
    out->has_delta_assoc = r.delta_assoc.has_value() ? 1 : 0;
    out->delta_assoc = r.delta_assoc.value_or(0.0);
    out->lambda = r.lambda;
    std::snprintf(out->provenance, sizeof(out->provenance), "%s",
                  r.provenance.c_str());
    out->outside_corollary = r.outside_corollary ? 1 : 0;
  });
}

namespace {
void fill_sigma(const cl::exponents::SigmaResult& r, cl_sigma_result* out) {
  out->s = r.s;
  out->t = r.t;
  out->w = r.w;
  out->delta_s = r.delta_s;
  out->delta_t = r.delta_t;
  out->delta_w = r.delta_w;
  out->sigma = r.sigma;
  out->feasible = r.feasible ? 1 : 0;
}
}  // namespace

cl_status cl_sigma_of_k(int k, int s, int t, int w, cl_sigma_result* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] { fill_sigma(cl::exponents::sigma_of_k(k, s, t, w), out); });
}

cl_status cl_optimize_sigma(int k, int s_max, int t_max, int w_max,
                            cl_sigma_result* out) {
  if (!out) return CL_ERR_USAGE;
  return guard(
      [&] { fill_sigma(cl::exponents::optimize_sigma(k, s_max, t_max, w_max), out); });
}

cl_status cl_g_bound_recipe(int k, double A, cl_g_bound* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    auto r = cl::exponents::g_bound_recipe(k, A);
    out->t_choice = r.t_choice;
    out->s_choice = r.s_choice;
    out->main_term = r.main_term;
  });
}

int cl_g_table_size(void) {
  return static_cast<int>(cl::exponents::reference_g_table().size());
}

cl_status cl_g_table_entry(int index, int* k, int* bound,
                           int* congruence_conditions, const char** citation) {
  const auto& table = cl::exponents::reference_g_table();
  if (index < 0 || index >= static_cast<int>(table.size())) return CL_ERR_USAGE;
  const auto& e = table[index];
  if (k) *k = e.k;
  if (bound) *bound = e.bound;
  if (congruence_conditions) *congruence_conditions = e.congruence_conditions ? 1 : 0;
  if (citation) *citation = e.citation;
  return CL_OK;
}

cl_status cl_local_density_get(uint64_t p, uint64_t n, int s, int k, int h_max,
                               cl_local_density* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    auto r = cl::singular::local_density(p, n, s, k, h_max);
    out->value = r.value;
    out->level = r.level;
    out->stabilized = r.stabilized ? 1 : 0;
  });
}

cl_status cl_singular_series_new(uint64_t n, int s, int k, uint64_t prime_cutoff,
                                 int h_max, uint64_t q_cutoff,
                                 cl_singular_series** out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    *out = new cl_singular_series{
        cl::singular::singular_series(n, s, k, prime_cutoff, h_max, q_cutoff)};
  });
}

void cl_singular_series_free(cl_singular_series* ss) { delete ss; }

double cl_singular_series_value(const cl_singular_series* ss) {
  return ss ? ss->approx.value : 0.0;
}

double cl_singular_series_qsum(const cl_singular_series* ss) {
  return ss ? ss->approx.alt_qsum : 0.0;
}

int cl_singular_series_all_stabilized(const cl_singular_series* ss) {
  return ss && ss->approx.all_stabilized ? 1 : 0;
}

int cl_singular_series_flagged(const cl_singular_series* ss) {
  return ss && ss->approx.s_below_recommended ? 1 : 0;
}

uint64_t cl_singular_series_factor_count(const cl_singular_series* ss) {
  return ss ? ss->approx.factors.size() : 0;
}

cl_status cl_singular_series_factor(const cl_singular_series* ss, uint64_t index,
                                    uint64_t* p, cl_local_density* out) {
  if (!ss || index >= ss->approx.factors.size()) return CL_ERR_USAGE;
  const auto& f = ss->approx.factors[index];
  if (p) *p = f.p;
  if (out) {
    out->value = f.value;
    out->level = f.level;
    out->stabilized = f.stabilized ? 1 : 0;
  }
  return CL_OK;
}

cl_status cl_main_term_get(uint64_t n, int s, int k, double series_value,
                           double eta, cl_main_term* out) {
  if (!out) return CL_ERR_USAGE;
  return guard([&] {
    auto r = cl::singular::main_term(n, s, k, series_value, eta);
    out->gamma_factor = r.gamma_factor;
    out->smooth_factor = r.smooth_factor;
    out->value = r.value;
  });
}

int cl_verify_run(void) { return cl::verify::run_and_print(std::cout); }

}  // extern "C"
