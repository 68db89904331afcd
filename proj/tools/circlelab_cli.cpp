// circlelab command-line front end. Talks to the core exclusively through
// the C API in circlelab.h; every subcommand emits a deterministic report
// (JSON with sorted keys, or CSV for tabular data).
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "circlelab.h"

namespace {

struct cli_error : std::runtime_error {
  int code;
  cli_error(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

void check(cl_status st) {
  if (st != CL_OK) throw cli_error(static_cast<int>(st), cl_last_error());
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt_u64(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%" PRIu64, x);
  return buf;
}

std::string fmt_i64(std::int64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%" PRId64, x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// JSON object with keys emitted in sorted order. Values are pre-rendered.
struct JsonObj {
  std::map<std::string, std::string> fields;

  void num(const std::string& k, double v) { fields[k] = fmt_double(v); }
  void integer(const std::string& k, std::int64_t v) { fields[k] = fmt_i64(v); }
  void uinteger(const std::string& k, std::uint64_t v) { fields[k] = fmt_u64(v); }
  void boolean(const std::string& k, bool v) { fields[k] = v ? "true" : "false"; }
  void str(const std::string& k, const std::string& v) { fields[k] = json_escape(v); }
  void raw(const std::string& k, const std::string& v) { fields[k] = v; }

  std::string render() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : fields) {
      if (!first) out += ",";
      first = false;
      out += json_escape(k) + ":" + v;
    }
    return out + "}";
  }
};

std::string json_array(const std::vector<std::string>& elems) {
  std::string out = "[";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += elems[i];
  }
  return out + "]";
}

std::string complex_json(cl_complex z) {
  JsonObj o;
  o.num("im", z.im);
  o.num("re", z.re);
  return o.render();
}

// A report is a JSON object plus an optional table used for CSV output.
struct Report {
  JsonObj json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  std::string render_csv() const {
    std::ostringstream out;
    if (!csv_header.empty()) {
      for (std::size_t i = 0; i < csv_header.size(); ++i)
        out << (i ? "," : "") << csv_header[i];
      out << "\n";
      for (const auto& row : csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out << (i ? "," : "") << row[i];
        out << "\n";
      }
    } else {
      // scalar report: fall back to key,value rows
      out << "key,value\n";
      for (const auto& [k, v] : json.fields) out << k << "," << v << "\n";
    }
    return out.str();
  }
};

std::vector<double> parse_ladder(const std::string& spec) {
  double start = 0, stop = 0, factor = 0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &factor,
                  &extra) != 3)
    throw cli_error(2, "ladder must be start:stop:factor");
  if (start <= 0 || factor <= 1 || stop < start)
    throw cli_error(2, "ladder needs start > 0, stop >= start, factor > 1");
  std::vector<double> out;
  for (double v = start; v <= stop * (1 + 1e-12); v *= factor)
    out.push_back(v);
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& spec) {
  std::vector<T> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      if constexpr (std::is_signed_v<T>)
        out.push_back(static_cast<T>(std::stoll(item)));
      else
        out.push_back(static_cast<T>(std::stoull(item)));
    } catch (const std::exception&) {
      throw cli_error(2, "bad list entry: " + item);
    }
  }
  if (out.empty()) throw cli_error(2, "empty list");
  return out;
}

struct Common {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;   // accepted for interface stability; unused
  int threads = 1;          // thread budget; computations are deterministic
  std::uint64_t list_limit = 1000;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", c.output, "write report to this path");
  cmd->add_option("--seed", c.seed, "ignored; all computations deterministic");
  cmd->add_option("--threads", c.threads, "thread budget");
  cmd->add_option("--list-limit", c.list_limit,
                  "cap on emitted list entries");
}

void emit(const Report& r, const Common& c) {
  std::string text =
      c.format == "csv" ? r.render_csv() : r.json.render() + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw cli_error(2, "cannot open output path: " + c.output);
    f << text;
  }
}

// ---- subcommand handlers ----

Report run_smooth(std::uint64_t P, std::uint64_t R, int k, const Common& c) {
  cl_smooth_set* set = nullptr;
  check(cl_smooth_set_new(P, R, k, &set));
  Report r;
  std::uint64_t card = cl_smooth_set_card(set);
  r.json.uinteger("card", card);
  r.json.num("eta", cl_smooth_set_eta(set));
  r.json.uinteger("P", P);
  r.json.uinteger("R", R);
  std::uint64_t listed = std::min(card, c.list_limit);
  std::vector<std::string> elems;
  r.csv_header = {"element"};
  for (std::uint64_t i = 0; i < listed; ++i) {
    std::uint64_t e = cl_smooth_set_elem(set, i);
    elems.push_back(fmt_u64(e));
    r.csv_rows.push_back({fmt_u64(e)});
  }
  r.json.raw("elements", json_array(elems));
  r.json.uinteger("listed", listed);
  cl_smooth_set_free(set);
  return r;
}

Report run_dickman(double u, const std::string& ladder) {
  Report r;
  if (!ladder.empty()) {
    std::vector<std::string> rows;
    r.csv_header = {"u", "rho"};
    for (double x : parse_ladder(ladder)) {
      double rho = 0;
      check(cl_dickman_rho(x, &rho));
      JsonObj o;
      o.num("rho", rho);
      o.num("u", x);
      rows.push_back(o.render());
      r.csv_rows.push_back({fmt_double(x), fmt_double(rho)});
    }
    r.json.raw("table", json_array(rows));
  } else {
    double rho = 0;
    check(cl_dickman_rho(u, &rho));
    r.json.num("rho", rho);
    r.json.num("u", u);
  }
  return r;
}

Report run_weyl_sum(double alpha, double P, int k) {
  cl_complex z{};
  check(cl_weyl_sum_f(alpha, P, k, &z));
  Report r;
  r.json.num("abs", std::hypot(z.re, z.im));
  r.json.num("alpha", alpha);
  r.json.num("im", z.im);
  r.json.num("re", z.re);
  return r;
}

Report run_smooth_sum(double alpha, std::uint64_t P, std::uint64_t R, int k) {
  cl_smooth_set* set = nullptr;
  check(cl_smooth_set_new(P, R, k, &set));
  cl_complex z{};
  cl_status st = cl_smooth_weyl_sum_h(set, alpha, &z);
  std::uint64_t card = cl_smooth_set_card(set);
  cl_smooth_set_free(set);
  check(st);
  Report r;
  r.json.num("abs", std::hypot(z.re, z.im));
  r.json.num("alpha", alpha);
  r.json.uinteger("card", card);
  r.json.num("im", z.im);
  r.json.num("re", z.re);
  return r;
}

Report run_complete_sum(std::uint64_t q, std::uint64_t a, int k) {
  cl_complex z{};
  check(cl_complete_sum_S(q, a, k, &z));
  Report r;
  r.json.num("abs", std::hypot(z.re, z.im));
  r.json.num("im", z.im);
  r.json.num("re", z.re);
  return r;
}

Report run_arcs(double P, int k, double Q, const Common& c) {
  cl_dissection* d = nullptr;
  check(cl_dissection_new(P, k, Q, &d));
  Report r;
  std::uint64_t count = cl_dissection_arc_count(d);
  r.json.uinteger("arc_count", count);
  r.json.boolean("overlapping", cl_dissection_overlapping(d) != 0);
  std::uint64_t listed = std::min(count, c.list_limit);
  std::vector<std::string> arcs;
  r.csv_header = {"q", "a", "halfwidth"};
  for (std::uint64_t i = 0; i < listed; ++i) {
    std::uint64_t q = 0, a = 0;
    double hw = 0;
    cl_status st = cl_dissection_arc(d, i, &q, &a, &hw);
    if (st != CL_OK) {
      cl_dissection_free(d);
      check(st);
    }
    JsonObj o;
    o.uinteger("a", a);
    o.num("halfwidth", hw);
    o.uinteger("q", q);
    arcs.push_back(o.render());
    r.csv_rows.push_back({fmt_u64(q), fmt_u64(a), fmt_double(hw)});
  }
  r.json.raw("arcs", json_array(arcs));
  r.json.uinteger("listed", listed);
  cl_dissection_free(d);
  return r;
}

Report run_major_approx(double alpha, double P, int k, double Q) {
  cl_dissection* d = nullptr;
  check(cl_dissection_new(P, k, Q, &d));
  cl_major_approx m{};
  cl_status st = cl_major_arc_approximant(d, alpha, &m);
  cl_dissection_free(d);
  check(st);
  cl_complex f{};
  check(cl_weyl_sum_f(alpha, P, k, &f));
  Report r;
  r.json.uinteger("a", m.a);
  r.json.num("abs_error",
             std::hypot(f.re - m.value.re, f.im - m.value.im));
  r.json.raw("f", complex_json(f));
  r.json.boolean("on_major", m.on_major != 0);
  r.json.uinteger("q", m.q);
  r.json.raw("S_qa", complex_json(m.S_qa));
  r.json.raw("v_beta", complex_json(m.v_beta));
  r.json.raw("value", complex_json(m.value));
  return r;
}

Report run_minor_survey(int k, const std::string& ladder, double q_exp,
                        std::uint64_t grid, double theta) {
  std::vector<double> Ps = parse_ladder(ladder);
  cl_minor_report m{};
  check(cl_minor_arc_survey(k, Ps.data(), static_cast<int>(Ps.size()), q_exp,
                            grid, theta, &m));
  Report r;
  if (m.has_delta) r.json.num("delta_hat", m.delta_hat);
  r.json.boolean("low_confidence", m.low_confidence != 0);
  r.json.num("sup_abs", m.sup_abs);
  r.json.num("sup_alpha", m.sup_alpha);
  r.json.num("tau_hat", m.tau_hat);
  r.json.num("tau_residual", m.tau_residual);
  return r;
}

Report run_mean_value(int k, int t, std::uint64_t P, std::uint64_t R) {
  std::uint64_t v = 0;
  check(cl_mean_value_S(k, t, P, R, &v));
  Report r;
  r.json.uinteger("P", P);
  r.json.uinteger("R", R);
  r.json.integer("k", k);
  r.json.integer("t", t);
  r.json.uinteger("value", v);
  return r;
}

Report run_fit_lambda(int k, int t, const std::string& ladder, double theta) {
  std::vector<double> Ps = parse_ladder(ladder);
  std::vector<std::uint64_t> counts(Ps.size(), 0);
  cl_lambda_fit fit{};
  check(cl_fit_lambda(k, t, Ps.data(), static_cast<int>(Ps.size()), theta,
                      &fit, counts.data()));
  Report r;
  r.json.num("lambda_hat", fit.lambda_hat);
  r.json.boolean("low_confidence", fit.low_confidence != 0);
  r.json.num("residual", fit.residual);
  std::vector<std::string> rows;
  r.csv_header = {"P", "count"};
  for (std::size_t i = 0; i < Ps.size(); ++i) {
    JsonObj o;
    o.num("P", Ps[i]);
    o.uinteger("count", counts[i]);
    rows.push_back(o.render());
    r.csv_rows.push_back({fmt_double(Ps[i]), fmt_u64(counts[i])});
  }
  r.json.raw("ladder", json_array(rows));
  return r;
}

Report run_count_r(std::uint64_t n, int s, int k, std::uint64_t smooth_R) {
  std::uint64_t v = 0;
  check(cl_count_R(n, s, k, smooth_R, &v));
  Report r;
  r.json.uinteger("count", v);
  r.json.integer("k", k);
  r.json.uinteger("n", n);
  r.json.integer("s", s);
  if (smooth_R) r.json.uinteger("smooth_R", smooth_R);
  return r;
}

Report run_three_cubes(std::uint64_t X) {
  std::uint64_t v = 0;
  check(cl_count_three_cubes(X, &v));
  Report r;
  r.json.uinteger("X", X);
  r.json.uinteger("count", v);
  return r;
}

Report run_exceptional(std::uint64_t N, int s, int k, std::uint64_t smooth_R,
                       const Common& c) {
  cl_exceptional_set* z = nullptr;
  check(cl_exceptional_set_new(N, s, k, smooth_R, &z));
  Report r;
  std::uint64_t card = cl_exceptional_set_card(z);
  r.json.uinteger("N", N);
  r.json.uinteger("card", card);
  std::uint64_t listed = std::min(card, c.list_limit);
  std::vector<std::string> elems;
  r.csv_header = {"element"};
  for (std::uint64_t i = 0; i < listed; ++i) {
    std::uint64_t e = cl_exceptional_set_elem(z, i);
    elems.push_back(fmt_u64(e));
    r.csv_rows.push_back({fmt_u64(e)});
  }
  r.json.raw("elements", json_array(elems));
  r.json.uinteger("listed", listed);
  cl_exceptional_set_free(z);
  return r;
}

Report run_k_moments(const std::string& members_spec, int t, std::uint64_t hP,
                     std::uint64_t hR, int hk) {
  std::vector<std::uint64_t> members = parse_list<std::uint64_t>(members_spec);
  cl_moment_report m{};
  check(cl_k_moments(members.data(), members.size(), t, hP, hR, hk, &m));
  Report r;
  r.json.uinteger("card", members.size());
  r.json.uinteger("fourth_moment", m.fourth_moment);
  if (m.has_mixed) r.json.uinteger("mixed_moment", m.mixed_moment);
  r.json.uinteger("second_moment", m.second_moment);
  return r;
}

cl_diff_config make_diff_config(const std::vector<std::int64_t>& psi, double P,
                                double T, double M, std::uint64_t R, int s,
                                int k, bool x_above_M, bool refine) {
  cl_diff_config cfg{};
  cfg.psi = psi.data();
  cfg.psi_len = static_cast<int>(psi.size());
  cfg.P = P;
  cfg.T = T;
  cfg.M = M;
  cfg.R = R;
  cfg.s = s;
  cfg.k = k;
  cfg.x_above_M = x_above_M ? 1 : 0;
  cfg.refine_congruence = refine ? 1 : 0;
  return cfg;
}

Report run_diff_count(bool eq24, const std::string& psi_spec, double P,
                      double T, double M, std::uint64_t R, int s, int k,
                      bool x_above_M, bool refine) {
  std::vector<std::int64_t> psi = parse_list<std::int64_t>(psi_spec);
  cl_diff_config cfg =
      make_diff_config(psi, P, T, M, R, s, k, x_above_M, refine);
  std::uint64_t v = 0;
  check(eq24 ? cl_count_eq_2_4(&cfg, &v) : cl_count_eq_2_3(&cfg, &v));
  Report r;
  r.json.uinteger("count", v);
  r.json.str("equation", eq24 ? "2.4" : "2.3");
  return r;
}

Report run_diff_poly(const std::string& psi_spec, std::int64_t h,
                     std::int64_t m, int k) {
  std::vector<std::int64_t> psi = parse_list<std::int64_t>(psi_spec);
  if (psi.size() < 2) throw cli_error(2, "psi needs degree >= 1");
  std::vector<std::int64_t> out(psi.size() - 1, 0);
  check(cl_difference_polynomial(psi.data(), static_cast<int>(psi.size()), h,
                                 m, k, out.data()));
  Report r;
  std::vector<std::string> coeffs;
  r.csv_header = {"degree", "coefficient"};
  for (std::size_t i = 0; i < out.size(); ++i) {
    coeffs.push_back(fmt_i64(out[i]));
    r.csv_rows.push_back({fmt_u64(i), fmt_i64(out[i])});
  }
  r.json.raw("coefficients", json_array(coeffs));
  return r;
}

Report run_delta_solve(double k, double t) {
  double d = 0;
  check(cl_solve_admissible_delta(k, t, &d));
  Report r;
  r.json.num("delta", d);
  r.json.num("k", k);
  r.json.num("t", t);
  return r;
}

Report run_delta_iterate(double k, double delta0, int steps, double phi) {
  std::vector<double> out(static_cast<std::size_t>(steps) + 1, 0.0);
  check(cl_iterate_differencing(k, delta0, steps, phi, out.data()));
  Report r;
  std::vector<std::string> vals;
  r.csv_header = {"step", "delta"};
  for (std::size_t i = 0; i < out.size(); ++i) {
    vals.push_back(fmt_double(out[i]));
    r.csv_rows.push_back({fmt_u64(i), fmt_double(out[i])});
  }
  r.json.raw("deltas", json_array(vals));
  r.json.str("rule", phi < 0 ? "adaptive" : "fixed");
  return r;
}

Report run_lambda_closed(int k, double t) {
  cl_exponent_record rec{};
  check(cl_exponent_record_get(k, t, &rec));
  Report r;
  r.json.num("delta_admissible", rec.delta_adm);
  if (rec.has_delta_assoc) r.json.num("delta_associated", rec.delta_assoc);
  r.json.integer("k", k);
  r.json.num("lambda", rec.lambda);
  r.json.boolean("outside_corollary", rec.outside_corollary != 0);
  r.json.str("provenance", rec.provenance);
  if (k == 3 && t == 3.0)
    r.json.num("reference_3_plus_xi", 3.0 + cl_xi_constant());
  r.json.num("t", t);
  return r;
}

Report run_delta_quasidiag(double k, double t) {
  double d = 0;
  check(cl_associated_delta_quasidiag(k, t, &d));
  Report r;
  r.json.num("delta", d);
  r.json.num("k", k);
  r.json.num("t", t);
  return r;
}

void sigma_fields(Report& r, const cl_sigma_result& s) {
  r.json.num("delta_s", s.delta_s);
  r.json.num("delta_t", s.delta_t);
  r.json.num("delta_w", s.delta_w);
  r.json.boolean("feasible", s.feasible != 0);
  r.json.integer("s", s.s);
  r.json.num("sigma", s.sigma);
  if (s.feasible) r.json.num("sigma_inverse", 1.0 / s.sigma);
  r.json.integer("t", s.t);
  r.json.integer("w", s.w);
}

Report run_sigma(int k, int s, int t, int w) {
  cl_sigma_result res{};
  check(cl_sigma_of_k(k, s, t, w, &res));
  Report r;
  r.json.integer("k", k);
  sigma_fields(r, res);
  return r;
}

Report run_sigma_opt(int k, int s_max, int t_max, int w_max) {
  if (s_max <= 0) s_max = 8 * k;
  if (t_max <= 0) t_max = 8 * k;
  if (w_max <= 0) w_max = 8 * k;
  cl_sigma_result res{};
  check(cl_optimize_sigma(k, s_max, t_max, w_max, &res));
  Report r;
  r.json.integer("k", k);
  sigma_fields(r, res);
  return r;
}

Report run_g_recipe(int k, double A) {
  cl_g_bound g{};
  check(cl_g_bound_recipe(k, A, &g));
  Report r;
  r.json.integer("k", k);
  r.json.num("main_term", g.main_term);
  r.json.integer("s", g.s_choice);
  r.json.integer("t", g.t_choice);
  return r;
}

Report run_g_table() {
  Report r;
  std::vector<std::string> rows;
  r.csv_header = {"k", "bound", "congruence_conditions", "citation"};
  for (int i = 0; i < cl_g_table_size(); ++i) {
    int k = 0, bound = 0, cong = 0;
    const char* cite = nullptr;
    check(cl_g_table_entry(i, &k, &bound, &cong, &cite));
    JsonObj o;
    o.integer("bound", bound);
    o.str("citation", cite);
    o.boolean("congruence_conditions", cong != 0);
    o.integer("k", k);
    rows.push_back(o.render());
    r.csv_rows.push_back({fmt_i64(k), fmt_i64(bound), cong ? "true" : "false",
                          cite});
  }
  r.json.raw("table", json_array(rows));
  return r;
}

Report run_local_density(std::uint64_t p, std::uint64_t n, int s, int k,
                         int h_max) {
  cl_local_density d{};
  check(cl_local_density_get(p, n, s, k, h_max, &d));
  Report r;
  r.json.integer("level", d.level);
  r.json.uinteger("n", n);
  r.json.uinteger("p", p);
  r.json.boolean("stabilized", d.stabilized != 0);
  r.json.num("value", d.value);
  return r;
}

Report run_singular_series(std::uint64_t n, int s, int k,
                           std::uint64_t prime_cutoff, int h_max,
                           std::uint64_t q_cutoff) {
  cl_singular_series* ss = nullptr;
  check(cl_singular_series_new(n, s, k, prime_cutoff, h_max, q_cutoff, &ss));
  Report r;
  r.json.boolean("all_stabilized", cl_singular_series_all_stabilized(ss) != 0);
  std::vector<std::string> facs;
  r.csv_header = {"p", "value", "level", "stabilized"};
  for (std::uint64_t i = 0; i < cl_singular_series_factor_count(ss); ++i) {
    std::uint64_t p = 0;
    cl_local_density d{};
    cl_status st = cl_singular_series_factor(ss, i, &p, &d);
    if (st != CL_OK) {
      cl_singular_series_free(ss);
      check(st);
    }
    JsonObj o;
    o.integer("level", d.level);
    o.uinteger("p", p);
    o.boolean("stabilized", d.stabilized != 0);
    o.num("value", d.value);
    facs.push_back(o.render());
    r.csv_rows.push_back({fmt_u64(p), fmt_double(d.value), fmt_i64(d.level),
                          d.stabilized ? "true" : "false"});
  }
  r.json.raw("factors", json_array(facs));
  r.json.uinteger("n", n);
  r.json.num("qsum", cl_singular_series_qsum(ss));
  r.json.boolean("s_below_recommended", cl_singular_series_flagged(ss) != 0);
  r.json.num("value", cl_singular_series_value(ss));
  cl_singular_series_free(ss);
  return r;
}

Report run_main_term(std::uint64_t n, int s, int k, double series, double eta,
                     std::uint64_t prime_cutoff, int h_max) {
  if (series < 0) {
    // no explicit series value: compute the truncated Euler product
    cl_singular_series* ss = nullptr;
    check(cl_singular_series_new(n, s, k, prime_cutoff, h_max, 1, &ss));
    series = cl_singular_series_value(ss);
    cl_singular_series_free(ss);
  }
  cl_main_term m{};
  check(cl_main_term_get(n, s, k, series, eta, &m));
  Report r;
  r.json.num("gamma_factor", m.gamma_factor);
  r.json.uinteger("n", n);
  r.json.num("series", series);
  r.json.num("smooth_factor", m.smooth_factor);
  r.json.num("value", m.value);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circlelab: circle-method numerical laboratory"};
  app.require_subcommand(1);

  Common common;
  Report report;
  int exit_code = 0;
  bool verify_mode = false;

  struct Cmd {
    CLI::App* sub;
    std::function<Report()> run;
  };
  std::vector<Cmd> cmds;
  auto add = [&](const std::string& name, const std::string& desc,
                 std::function<Report()> run) -> CLI::App* {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub, common);
    cmds.push_back({sub, std::move(run)});
    return sub;
  };

  // parameter storage shared across subcommands; each subcommand binds the
  // fields it needs
  static std::uint64_t P_u = 0, R_u = 0, n_u = 0, N_u = 0, X_u = 0, q_u = 0,
                       a_u = 0, p_u = 0, smooth_R = 0, grid = 2048,
                       prime_cutoff = 100, q_cutoff = 100;
  static int k_i = 0, t_i = 0, s_i = 0, w_i = 0, steps = 10, h_max = 8,
             s_max = 0, t_max = 0, w_max = 0, hk = 2;
  static std::uint64_t hP = 0, hR = 0;
  static double alpha = 0, P_d = 0, Q_d = 0, k_d = 0, t_d = 0, theta = 1.0,
                q_exp = 0.5, smooth_theta = 0, delta0 = 0, phi = -1, A_d = 1,
                eta = 0, series = -1, u_d = 2, M_d = 0, T_d = 0, h_i = 1,
                m_i = 2;
  static std::string ladder, members, psi_spec;
  static bool x_above_M = false, refine = false;

  {
    auto* s = add("smooth", "enumerate the smooth set A(P,R)",
                  [&] { return run_smooth(P_u, R_u, k_i, common); });
    s->add_option("--P", P_u)->required();
    s->add_option("--R", R_u)->required();
    s->add_option("--k", k_i)->required();
  }
  {
    auto* s = add("dickman", "Dickman rho at u or on a ladder",
                  [&] { return run_dickman(u_d, ladder); });
    s->add_option("--u", u_d);
    s->add_option("--ladder", ladder, "start:stop:factor");
  }
  {
    auto* s = add("weyl-sum", "classical Weyl sum f(alpha; P, k)",
                  [&] { return run_weyl_sum(alpha, P_d, k_i); });
    s->add_option("--alpha", alpha)->required();
    s->add_option("--P", P_d)->required();
    s->add_option("--k", k_i)->required();
  }
  {
    auto* s = add("smooth-sum", "smooth Weyl sum h(alpha; A(P,R), k)",
                  [&] { return run_smooth_sum(alpha, P_u, R_u, k_i); });
    s->add_option("--alpha", alpha)->required();
    s->add_option("--P", P_u)->required();
    s->add_option("--R", R_u)->required();
    s->add_option("--k", k_i)->required();
  }
  {
    auto* s = add("complete-sum", "complete sum S(q, a) for x^k mod q",
                  [&] { return run_complete_sum(q_u, a_u, k_i); });
    s->add_option("--q", q_u)->required();
    s->add_option("--a", a_u)->required();
    s->add_option("--k", k_i)->required();
  }
  {
    auto* s = add("arcs", "Farey major-arc dissection M(Q)",
                  [&] { return run_arcs(P_d, k_i, Q_d, common); });
    s->add_option("--P", P_d)->required();
    s->add_option("--k", k_i)->required();
    s->add_option("--Q", Q_d)->required();
  }
  {
    auto* s = add("major-approx", "major-arc approximant f*(alpha) vs f(alpha)",
                  [&] { return run_major_approx(alpha, P_d, k_i, Q_d); });
    s->add_option("--alpha", alpha)->required();
    s->add_option("--P", P_d)->required();
    s->add_option("--k", k_i)->required();
    s->add_option("--Q", Q_d)->required();
  }
  {
    auto* s = add("minor-survey", "minor-arc sup survey over a P ladder", [&] {
      return run_minor_survey(k_i, ladder, q_exp, grid, smooth_theta);
    });
    s->add_option("--k", k_i)->required();
    s->add_option("--ladder", ladder, "start:stop:factor")->required();
    s->add_option("--Q-exponent", q_exp);
    s->add_option("--grid", grid);
    s->add_option("--smooth-theta", smooth_theta,
                  "survey h with R = ceil(P^theta); 0 surveys f");
  }
  {
    auto* s = add("mean-value", "exact mean value S_t(P, R)",
                  [&] { return run_mean_value(k_i, t_i, P_u, R_u); });
    s->add_option("--k", k_i)->required();
    s->add_option("--t", t_i)->required();
    s->add_option("--P", P_u)->required();
    s->add_option("--R", R_u)->required();
  }
  {
    auto* s = add("fit-lambda", "fit the permissible exponent on a P ladder",
                  [&] { return run_fit_lambda(k_i, t_i, ladder, theta); });
    s->add_option("--k", k_i)->required();
    s->add_option("--t", t_i)->required();
    s->add_option("--ladder", ladder, "start:stop:factor")->required();
    s->add_option("--theta", theta, "R = ceil(P^theta); >= 1 means R = P");
  }
  {
    auto* s = add("count-r", "representation count R(n) by s k-th powers",
                  [&] { return run_count_r(n_u, s_i, k_i, smooth_R); });
    s->add_option("--n", n_u)->required();
    s->add_option("--s", s_i)->required();
    s->add_option("--k", k_i)->required();
    s->add_option("--smooth-R", smooth_R, "restrict to R-smooth variables");
  }
  {
    auto* s = add("three-cubes", "count n <= X that are sums of three cubes",
                  [&] { return run_three_cubes(X_u); });
    s->add_option("--X", X_u)->required();
  }
  {
    auto* s = add("exceptional", "exceptional set Z(N) in (N/2, N]", [&] {
      return run_exceptional(N_u, s_i, k_i, smooth_R, common);
    });
    s->add_option("--N", N_u)->required();
    s->add_option("--s", s_i)->required();
    s->add_option("--k", k_i)->required();
    s->add_option("--smooth-R", smooth_R);
  }
  {
    auto* s = add("k-moments", "moments of an explicit set's Fourier series",
                  [&] { return run_k_moments(members, t_i, hP, hR, hk); });
    s->add_option("--members", members, "comma-separated integers")->required();
    s->add_option("--t", t_i, "mixed moment order (0 = none)");
    s->add_option("--hP", hP);
    s->add_option("--hR", hR);
    s->add_option("--hk", hk);
  }
  for (bool eq24 : {false, true}) {
    auto* s = add(eq24 ? "diff-count-24" : "diff-count-23",
                  eq24 ? "differencing counter, refined form"
                       : "differencing counter, first form",
                  [&, eq24] {
                    return run_diff_count(eq24, psi_spec, P_d, T_d, M_d,
                                          R_u, s_i, k_i, x_above_M, refine);
                  });
    s->add_option("--psi", psi_spec, "comma-separated coefficients")
        ->required();
    s->add_option("--P", P_d)->required();
    s->add_option("--T", T_d)->required();
    s->add_option("--M", M_d)->required();
    s->add_option("--R", R_u)->required();
    s->add_option("--s", s_i)->required();
    s->add_option("--k", k_i)->required();
    s->add_flag("--x-above-M", x_above_M);
    if (eq24) s->add_flag("--refine", refine, "impose z = w mod m^k");
  }
  {
    auto* s = add("diff-poly", "difference polynomial psi_1(z; h; m)",
                  [&] {
                    return run_diff_poly(psi_spec, static_cast<int64_t>(h_i),
                                         static_cast<int64_t>(m_i), k_i);
                  });
    s->add_option("--psi", psi_spec)->required();
    s->add_option("--h-shift", h_i)->required();
    s->add_option("--m", m_i)->required();
    s->add_option("--k", k_i)->required();
  }
  {
    auto* s = add("delta-solve", "admissible exponent Delta from the closed form",
                  [&] { return run_delta_solve(k_d, t_d); });
    s->add_option("--k", k_d)->required();
    s->add_option("--t", t_d)->required();
  }
  {
    auto* s = add("delta-iterate", "differencing iteration for Delta",
                  [&] { return run_delta_iterate(k_d, delta0, steps, phi); });
    s->add_option("--k", k_d)->required();
    s->add_option("--delta0", delta0)->required();
    s->add_option("--steps", steps);
    s->add_option("--phi", phi, "fixed phi; omit for the adaptive rule");
  }
  {
    auto* s = add("lambda-closed", "permissible exponent record at (k, t)",
                  [&] { return run_lambda_closed(k_i, t_d); });
    s->alias("exponents");
    s->add_option("--k", k_i)->required();
    s->add_option("--t", t_d)->required();
  }
  {
    auto* s = add("delta-quasidiag", "quasi-diagonal associated exponent",
                  [&] { return run_delta_quasidiag(k_d, t_d); });
    s->add_option("--k", k_d)->required();
    s->add_option("--t", t_d)->required();
  }
  {
    auto* s = add("sigma", "minor-arc exponent sigma(k) at (s, t, w)",
                  [&] { return run_sigma(k_i, s_i, t_i, w_i); });
    s->add_option("--k", k_i)->required();
    s->add_option("--s", s_i)->required();
    s->add_option("--t", t_i)->required();
    s->add_option("--w", w_i)->required();
  }
  {
    auto* s = add("sigma-opt", "optimize sigma(k) over (s, t, w)",
                  [&] { return run_sigma_opt(k_i, s_max, t_max, w_max); });
    s->add_option("--k", k_i)->required();
    s->add_option("--s-max", s_max, "default 8k");
    s->add_option("--t-max", t_max, "default 8k");
    s->add_option("--w-max", w_max, "default 8k");
  }
  {
    auto* s = add("g-recipe", "G(k) bound recipe (t, s, main term)",
                  [&] { return run_g_recipe(k_i, A_d); });
    s->add_option("--k", k_i)->required();
    s->add_option("--A", A_d);
  }
  add("g-table", "published G(k) bounds, k = 3..20", [&] { return run_g_table(); });
  {
    auto* s = add("local-density", "p-adic density v_p(n)",
                  [&] { return run_local_density(p_u, n_u, s_i, k_i, h_max); });
    s->add_option("--p", p_u)->required();
    s->add_option("--n", n_u)->required();
    s->add_option("--s", s_i)->required();
    s->add_option("--k", k_i)->required();
    s->add_option("--h-max", h_max);
  }
  {
    auto* s = add("singular-series", "truncated singular series with q-sum check",
                  [&] {
                    return run_singular_series(n_u, s_i, k_i, prime_cutoff,
                                               h_max, q_cutoff);
                  });
    s->add_option("--n", n_u)->required();
    s->add_option("--s", s_i)->required();
    s->add_option("--k", k_i)->required();
    s->add_option("--prime-cutoff", prime_cutoff);
    s->add_option("--h-max", h_max);
    s->add_option("--q-cutoff", q_cutoff);
  }
  {
    auto* s = add("main-term", "main term for R(n)", [&] {
      return run_main_term(n_u, s_i, k_i, series, eta, prime_cutoff, h_max);
    });
    s->add_option("--n", n_u)->required();
    s->add_option("--s", s_i)->required();
    s->add_option("--k", k_i)->required();
    s->add_option("--series", series, "series value; omit to compute");
    s->add_option("--eta", eta, "smooth correction rho(1/eta)^s when > 0");
  }
  {
    auto* s = app.add_subcommand("verify", "run the acceptance suite");
    add_common(s, common);
    cmds.push_back({s, [&]() -> Report {
                      verify_mode = true;
                      exit_code = cl_verify_run() == 0 ? 0 : 1;
                      return Report{};
                    }});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    for (const auto& c : cmds) {
      if (c.sub->parsed()) {
        Report r = c.run();
        if (!verify_mode) emit(r, common);
        return exit_code;
      }
    }
  } catch (const cli_error& e) {
    std::cerr << "{\"error\":" << json_escape(e.what())
              << ",\"status\":" << e.code << "}\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":" << json_escape(e.what()) << ",\"status\":5}\n";
    return 5;
  }
  return 2;
}
