/* circlelab: a numerical laboratory for circle-method computations.
 *
 * C API over the C++ core. All functions return a cl_status; results come
 * back through out-parameters. Objects with internal state are exposed as
 * opaque handles with explicit free functions.
 */
#ifndef CIRCLELAB_H
#define CIRCLELAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_USAGE = 2,      /* invalid arguments / preconditions */
  CL_ERR_CAPACITY = 3,   /* configured ceiling or budget exceeded */
  CL_ERR_INFEASIBLE = 4, /* no feasible result (e.g. sigma numerator <= 0) */
  CL_ERR_INTERNAL = 5
} cl_status;

/* Message for the most recent error on this thread. */
const char* cl_last_error(void);

typedef struct cl_complex {
  double re;
  double im;
} cl_complex;

/* ---- smooth numbers and Dickman rho ---- */

typedef struct cl_smooth_set cl_smooth_set;

cl_status cl_smooth_set_new(uint64_t P, uint64_t R, int k, cl_smooth_set** out);
void cl_smooth_set_free(cl_smooth_set* set);
uint64_t cl_smooth_set_card(const cl_smooth_set* set);
uint64_t cl_smooth_set_elem(const cl_smooth_set* set, uint64_t index);
double cl_smooth_set_eta(const cl_smooth_set* set);

cl_status cl_dickman_rho(double u, double* out);

/* power residue table: out must hold p_h entries; out[c] = #{x : x^k = c mod p_h} */
cl_status cl_power_residue_table(uint64_t p_h, int k, uint64_t* out);

/* ---- exponential sums and arcs ---- */

cl_status cl_weyl_sum_f(double alpha, double P, int k, cl_complex* out);
cl_status cl_smooth_weyl_sum_h(const cl_smooth_set* set, double alpha,
                               cl_complex* out);
cl_status cl_complete_sum_S(uint64_t q, uint64_t a, int k, cl_complex* out);
cl_status cl_oscillatory_v(double beta, double P, int k, cl_complex* out);

typedef struct cl_dissection cl_dissection;

cl_status cl_dissection_new(double P, int k, double Q, cl_dissection** out);
void cl_dissection_free(cl_dissection* d);
uint64_t cl_dissection_arc_count(const cl_dissection* d);
cl_status cl_dissection_arc(const cl_dissection* d, uint64_t index, uint64_t* q,
                            uint64_t* a, double* halfwidth);
int cl_dissection_overlapping(const cl_dissection* d);

typedef struct cl_major_approx {
  int on_major;
  uint64_t q;
  uint64_t a;
  cl_complex S_qa;
  cl_complex v_beta;
  cl_complex value;
} cl_major_approx;

cl_status cl_major_arc_approximant(const cl_dissection* d, double alpha,
                                   cl_major_approx* out);

typedef struct cl_minor_report {
  double sup_abs;
  double sup_alpha;
  double tau_hat;
  double tau_residual;
  int low_confidence;
  double delta_hat;
  int has_delta;
} cl_minor_report;

/* Q = min(P^Q_exponent, P^{k/2}/2); smooth_theta > 0 surveys h with
 * R = ceil(P^smooth_theta), otherwise the classical sum f. */
cl_status cl_minor_arc_survey(int k, const double* P_ladder, int ladder_len,
                              double Q_exponent, uint64_t grid_size,
                              double smooth_theta, cl_minor_report* out);

/* ---- exact counting ---- */

cl_status cl_mean_value_S(int k, int t, uint64_t P, uint64_t R, uint64_t* out);

typedef struct cl_lambda_fit {
  double lambda_hat;
  double residual;
  int low_confidence;
} cl_lambda_fit;

/* theta >= 1 takes R = P; otherwise R = ceil(P^theta). counts, when non-NULL,
 * receives the S_t ladder (ladder_len entries). */
cl_status cl_fit_lambda(int k, int t, const double* P_ladder, int ladder_len,
                        double theta, cl_lambda_fit* out, uint64_t* counts);

/* smooth_R = 0 counts over the full range [1, n^{1/k}]. */
cl_status cl_count_R(uint64_t n, int s, int k, uint64_t smooth_R, uint64_t* out);

cl_status cl_count_three_cubes(uint64_t X, uint64_t* out);

typedef struct cl_exceptional_set cl_exceptional_set;

cl_status cl_exceptional_set_new(uint64_t N, int s, int k, uint64_t smooth_R,
                                 cl_exceptional_set** out);
void cl_exceptional_set_free(cl_exceptional_set* set);
uint64_t cl_exceptional_set_card(const cl_exceptional_set* set);
uint64_t cl_exceptional_set_elem(const cl_exceptional_set* set, uint64_t index);

typedef struct cl_moment_report {
  uint64_t second_moment;
  uint64_t fourth_moment;
  uint64_t mixed_moment;
  int has_mixed;
} cl_moment_report;

/* Moments of the Fourier series over an explicit set. t > 0 adds the mixed
 * moment against |h(alpha; hP, hR)|^{2t} with exponent hk. */
cl_status cl_k_moments(const uint64_t* members, uint64_t count, int t,
                       uint64_t hP, uint64_t hR, int hk, cl_moment_report* out);

/* ---- efficient differencing ---- */

typedef struct cl_diff_config {
  const int64_t* psi;      /* coefficients, psi[i] z^i */
  int psi_len;             /* degree + 1, >= 3 */
  double P, T, M;
  uint64_t R;
  int s;
  int k;
  int x_above_M;           /* (2.3): restrict smooth variables to x > M */
  int refine_congruence;   /* (2.4): impose z == w mod m^k */
} cl_diff_config;

cl_status cl_count_eq_2_3(const cl_diff_config* cfg, uint64_t* out);
cl_status cl_count_eq_2_4(const cl_diff_config* cfg, uint64_t* out);

/* out must hold psi_len - 1 entries (degree drops by one). */
cl_status cl_difference_polynomial(const int64_t* psi, int psi_len, int64_t h,
                                   int64_t m, int k, int64_t* out);

/* ---- exponent calculus ---- */

double cl_xi_constant(void);

cl_status cl_solve_admissible_delta(double k, double t, double* out);
cl_status cl_permissible_lambda_closed(double k, double t, double* out);
/* CL_ERR_INFEASIBLE when (k,t) is outside the quasi-diagonal range. */
cl_status cl_associated_delta_quasidiag(double k, double t, double* out);

/* phi < 0 selects the adaptive rule phi = 1/(k + Delta_s). out must hold
 * steps + 1 entries (Delta_0 .. Delta_steps). */
cl_status cl_iterate_differencing(double k, double delta0, int steps, double phi,
                                  double* out);

typedef struct cl_exponent_record {
  double delta_adm;
  double delta_assoc;
  int has_delta_assoc;
  double lambda;
  char provenance[32];
  int outside_corollary;
} cl_exponent_record;

cl_status cl_exponent_record_get(int k, double t, cl_exponent_record* out);

typedef struct cl_sigma_result {
  int s, t, w;
  double delta_s, delta_t, delta_w;
  double sigma;
  int feasible;
} cl_sigma_result;

cl_status cl_sigma_of_k(int k, int s, int t, int w, cl_sigma_result* out);
cl_status cl_optimize_sigma(int k, int s_max, int t_max, int w_max,
                            cl_sigma_result* out);

typedef struct cl_g_bound {
  int64_t t_choice;
  int64_t s_choice;
  double main_term;
} cl_g_bound;

cl_status cl_g_bound_recipe(int k, double A, cl_g_bound* out);

int cl_g_table_size(void);
cl_status cl_g_table_entry(int index, int* k, int* bound,
                           int* congruence_conditions, const char** citation);

/* ---- singular series ---- */

typedef struct cl_local_density {
  double value;
  int level;
  int stabilized;
} cl_local_density;

cl_status cl_local_density_get(uint64_t p, uint64_t n, int s, int k, int h_max,
                               cl_local_density* out);

typedef struct cl_singular_series cl_singular_series;

cl_status cl_singular_series_new(uint64_t n, int s, int k, uint64_t prime_cutoff,
                                 int h_max, uint64_t q_cutoff,
                                 cl_singular_series** out);
void cl_singular_series_free(cl_singular_series* ss);
double cl_singular_series_value(const cl_singular_series* ss);
double cl_singular_series_qsum(const cl_singular_series* ss);
int cl_singular_series_all_stabilized(const cl_singular_series* ss);
int cl_singular_series_flagged(const cl_singular_series* ss);
uint64_t cl_singular_series_factor_count(const cl_singular_series* ss);
cl_status cl_singular_series_factor(const cl_singular_series* ss, uint64_t index,
                                    uint64_t* p, cl_local_density* out);

typedef struct cl_main_term {
  double gamma_factor;
  double smooth_factor;
  double value;
} cl_main_term;

/* eta > 0 applies the smooth correction c(eta)^s = rho(1/eta)^s. */
cl_status cl_main_term_get(uint64_t n, int s, int k, double series_value,
                           double eta, cl_main_term* out);

/* ---- acceptance suite ---- */

/* Prints one PASS/FAIL line per criterion to stdout; returns the number of
 * failed criteria. */
int cl_verify_run(void);

#ifdef __cplusplus
}
#endif

#endif /* CIRCLELAB_H */
