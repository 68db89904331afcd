/* Pure C smoke test of the shared-library API. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "circlelab.h"

static int failures = 0;

#define EXPECT(cond, msg)                         \
  do {                                            \
    if (!(cond)) {                                \
      fprintf(stderr, "FAIL: %s\n", msg);         \
      ++failures;                                 \
    }                                             \
  } while (0)

int main(void) {
  /* dickman rho */
  double rho = 0.0;
  EXPECT(cl_dickman_rho(2.0, &rho) == CL_OK, "dickman status");
  EXPECT(fabs(rho - (1.0 - log(2.0))) < 1e-9, "rho(2) = 1 - ln 2");

  /* smooth set handle */
  cl_smooth_set* set = NULL;
  EXPECT(cl_smooth_set_new(10, 3, 2, &set) == CL_OK, "smooth_set_new");
  EXPECT(cl_smooth_set_card(set) == 7, "card A(10,3) = 7");
  EXPECT(cl_smooth_set_elem(set, 4) == 6, "5th smooth element is 6");
  EXPECT(fabs(cl_smooth_set_eta(set) - log(3.0) / log(10.0)) < 1e-12, "eta");

  /* smooth Weyl sum at 1/2 */
  cl_complex h;
  EXPECT(cl_smooth_weyl_sum_h(set, 0.5, &h) == CL_OK, "smooth sum status");
  EXPECT(fabs(h.re - 1.0) < 1e-12 && fabs(h.im) < 1e-12, "h(1/2) = 1");
  cl_smooth_set_free(set);

  /* complete sum pinned value */
  cl_complex S;
  EXPECT(cl_complete_sum_S(4, 1, 2, &S) == CL_OK, "complete sum status");
  EXPECT(fabs(S.re - 2.0) < 1e-12 && fabs(S.im - 2.0) < 1e-12,
         "S(4,1) = 2+2i");

  /* exact mean value */
  uint64_t mv = 0;
  EXPECT(cl_mean_value_S(2, 2, 4, 4, &mv) == CL_OK, "mean value status");
  EXPECT(mv == 28, "S_2(4,4) = 28");

  /* error path: invalid smooth parameters set the thread-local message */
  cl_smooth_set* bad = NULL;
  cl_status st = cl_smooth_set_new(4, 8, 2, &bad);
  EXPECT(st == CL_ERR_USAGE, "R > P is a usage error");
  EXPECT(cl_last_error() != NULL && strlen(cl_last_error()) > 0,
         "last_error populated");

  /* infeasible: quasi-diagonal exponent outside its range */
  double d = 0.0;
  EXPECT(cl_associated_delta_quasidiag(10.0, 5.0, &d) == CL_ERR_INFEASIBLE,
         "quasi-diagonal range check");

  /* exponent calculus */
  EXPECT(fabs(cl_xi_constant() - 0.24941301) < 5e-9, "xi constant");
  EXPECT(cl_solve_admissible_delta(10.0, 5.0, &d) == CL_OK, "delta status");
  EXPECT(fabs(d / 10.0 - 0.5671432904) < 1e-9, "omega constant");

  /* g table */
  EXPECT(cl_g_table_size() == 18, "g table size");
  int k = 0, bound = 0, cong = 0;
  const char* cite = NULL;
  EXPECT(cl_g_table_entry(0, &k, &bound, &cong, &cite) == CL_OK,
         "g table entry status");
  EXPECT(k == 3 && bound == 7 && !cong, "G(3) <= 7");
  EXPECT(cite != NULL, "citation present");
  EXPECT(cl_g_table_entry(99, &k, &bound, &cong, &cite) == CL_ERR_USAGE,
         "out-of-range table index");

  /* singular series handle */
  cl_singular_series* ss = NULL;
  EXPECT(cl_singular_series_new(10, 5, 2, 100, 10, 100, &ss) == CL_OK,
         "singular series status");
  double v = cl_singular_series_value(ss);
  double q = cl_singular_series_qsum(ss);
  EXPECT(v > 0.0 && fabs(v - q) / v < 0.05, "truncations agree");
  EXPECT(cl_singular_series_factor_count(ss) == 25, "25 primes below 100");
  cl_singular_series_free(ss);

  if (failures) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return 1;
  }
  printf("C API smoke test passed\n");
  return 0;
}
