#include "expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace cl::expsum {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t ipow(std::uint64_t x, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}
}  // namespace

cplx unit_phase(double z) {
  double frac = z - std::floor(z);
  return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

double frac_mul(double alpha, std::uint64_t n) {
  long double z = static_cast<long double>(alpha) * static_cast<long double>(n);
  long double frac = z - std::floor(z);
  if (frac >= 1.0L) frac -= 1.0L;
  return static_cast<double>(frac);
}

cplx weyl_sum_f(double alpha, double P, int k) {
  if (P < 1.0) return {0.0, 0.0};
  auto n = static_cast<std::uint64_t>(std::floor(P));
  cplx sum{0.0, 0.0};
  for (std::uint64_t x = 1; x <= n; ++x) {
    double frac = frac_mul(alpha, ipow(x, k));
    sum += cplx{std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
  }
  return sum;
}

cplx smooth_weyl_sum_h(double alpha, const arith::SmoothSet& set) {
  cplx sum{0.0, 0.0};
  const int k = set.params.k;
  for (std::uint64_t x : set.elements) {
    double frac = frac_mul(alpha, ipow(x, k));
    sum += cplx{std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
  }
  return sum;
}

cplx complete_sum_S(std::uint64_t q, std::uint64_t a, int k) {
  if (q < 1) throw std::invalid_argument("complete_sum_S: q >= 1 required");
  cplx sum{0.0, 0.0};
  for (std::uint64_t r = 1; r <= q; ++r) {
    // a r^k / q mod 1, with the numerator reduced mod q first
    std::uint64_t rk = arith::pow_mod(r, static_cast<std::uint64_t>(k), q);
    std::uint64_t num = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a % q) * rk) % q);
    double frac = static_cast<double>(num) / static_cast<double>(q);
    sum += cplx{std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
  }
  return sum;
}

namespace {

// 10-point Gauss-Legendre on [-1,1]
constexpr double kGLx[5] = {0.1488743389816312, 0.4333953941292472,
                            0.6794095682990244, 0.8650633666889845,
                            0.9739065285171717};
constexpr double kGLw[5] = {0.2955242247147529, 0.2692667193099963,
                            0.2190863625159820, 0.1494513491505806,
                            0.0666713443086881};

cplx gl10(double lo, double hi, double beta, int k) {
  double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  cplx acc{0.0, 0.0};
  for (int i = 0; i < 5; ++i) {
    for (double s : {-kGLx[i], kGLx[i]}) {
      double g = c + h * s;
      acc += kGLw[i] * unit_phase(beta * std::pow(g, k));
    }
  }
  return acc * h;
}

}  // namespace

cplx oscillatory_v(double beta, double P, int k) {
  if (P < 0.0) throw std::invalid_argument("oscillatory_v: P >= 0 required");
  if (P == 0.0) return {0.0, 0.0};
  double oscillations = std::abs(beta) * std::pow(P, k);
  if (oscillations > 2.0e5)
    throw capacity_error("oscillatory_v: |beta| P^k exceeds oscillation budget");
  // >= 8 panels per period, and a floor so the k-th power shape is resolved
  std::uint64_t panels =
      std::max<std::uint64_t>(64, static_cast<std::uint64_t>(8.0 * oscillations) + 1);
  cplx acc{0.0, 0.0};
  double step = P / static_cast<double>(panels);
  for (std::uint64_t i = 0; i < panels; ++i)
    acc += gl10(i * step, (i + 1) * step, beta, k);
  return acc;
}

ArcDissection::ArcDissection(double P, int k, double Q) : P_(P), k_(k), Q_(Q) {
  if (P < 1.0 || k < 1) throw std::invalid_argument("dissection: P >= 1, k >= 1");
  double qmax_allowed = 0.5 * std::pow(P, 0.5 * k);
  if (Q < 1.0 || Q > qmax_allowed)
    throw std::out_of_range("dissection: require 1 <= Q <= P^{k/2}/2");
  double width_num = Q * std::pow(P, -static_cast<double>(k));
  auto qmax = static_cast<std::uint64_t>(std::floor(Q));
  for (std::uint64_t q = 1; q <= qmax; ++q) {
    for (std::uint64_t a = 0; a < std::max<std::uint64_t>(q, 1); ++a) {
      if (q == 1 && a > 0) break;
      if (q > 1 && (a == 0 || std::gcd(a, q) != 1)) continue;
      arcs_.push_back({q, a, width_num / static_cast<double>(q)});
    }
  }
  // diagnostic: neighbouring Farey centers closer than the sum of halfwidths
  std::vector<std::pair<double, double>> centers;  // (center, halfwidth)
  for (const Arc& arc : arcs_)
    centers.emplace_back(static_cast<double>(arc.a) / static_cast<double>(arc.q),
                         arc.halfwidth);
  std::sort(centers.begin(), centers.end());
  for (std::size_t i = 0; i + 1 < centers.size(); ++i) {
    if (centers[i + 1].first - centers[i].first <
        centers[i].second + centers[i + 1].second) {
      overlapping_ = true;
      break;
    }
  }
}

std::optional<Arc> ArcDissection::locate(double alpha) const {
  alpha -= std::floor(alpha);
  for (const Arc& arc : arcs_) {  // ordered by (q, a): first hit wins
    double center = static_cast<double>(arc.a) / static_cast<double>(arc.q);
    double d = std::abs(alpha - center);
    d = std::min(d, 1.0 - d);  // torus distance
    if (d <= arc.halfwidth) return arc;
  }
  return std::nullopt;
}

MajorArcApproximant major_arc_approximant(double alpha, const ArcDissection& d) {
  MajorArcApproximant out;
  auto arc = d.locate(alpha);
  if (!arc) return out;
  out.on_major = true;
  out.q = arc->q;
  out.a = arc->a;
  alpha -= std::floor(alpha);
  double center = static_cast<double>(arc->a) / static_cast<double>(arc->q);
  double beta = alpha - center;
  if (beta > 0.5) beta -= 1.0;  // wrap of the q=1 arc near alpha=1
  if (beta < -0.5) beta += 1.0;
  out.S_qa = complete_sum_S(arc->q, arc->a, d.k());
  out.v_beta = oscillatory_v(beta, d.P(), d.k());
  out.value = out.S_qa * out.v_beta / static_cast<double>(arc->q);
  return out;
}

cplx torus_mean(std::uint64_t n_samples, std::uint64_t degree,
                const std::function<cplx(double)>& integrand) {
  if (n_samples <= 2 * degree)
    throw std::invalid_argument("torus_mean: need more than 2*degree samples");
  cplx acc{0.0, 0.0};
  for (std::uint64_t j = 0; j < n_samples; ++j)
    acc += integrand(static_cast<double>(j) / static_cast<double>(n_samples));
  return acc / static_cast<double>(n_samples);
}

namespace {

// golden-section search for a local max of |g| on [lo,hi]
double golden_refine(const std::function<double(double)>& g, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 40 && (b - a) > 1e-12; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = g(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

MinorArcReport minor_arc_survey(const SurveyConfig& cfg) {
  if (cfg.grid_size < 1000)
    throw std::invalid_argument("minor_arc_survey: grid_size >= 1000 required");
  if (cfg.P_ladder.empty())
    throw std::invalid_argument("minor_arc_survey: empty P ladder");
  MinorArcReport out;
  std::vector<double> sups;
  for (double P : cfg.P_ladder) {
    double Q = std::min(std::pow(P, cfg.Q_exponent), 0.5 * std::pow(P, 0.5 * cfg.k));
    Q = std::max(1.0, Q);
    ArcDissection diss(P, cfg.k, Q);
    arith::SmoothSet smooth;
    const bool use_smooth = cfg.smooth_theta > 0.0;
    if (use_smooth) {
      arith::SmoothParams sp;
      sp.P = static_cast<std::uint64_t>(P);
      sp.R = std::max<std::uint64_t>(
          2, static_cast<std::uint64_t>(std::ceil(std::pow(P, cfg.smooth_theta))));
      sp.k = cfg.k;
      smooth = arith::enumerate_smooth(sp);
    }
    auto eval = [&](double alpha) {
      return use_smooth ? std::abs(smooth_weyl_sum_h(alpha, smooth))
                        : std::abs(weyl_sum_f(alpha, P, cfg.k));
    };
    double best = 0.0, best_alpha = 0.0;
    double step = 1.0 / static_cast<double>(cfg.grid_size);
    for (std::uint64_t j = 0; j < cfg.grid_size; ++j) {
      double alpha = (static_cast<double>(j) + 0.5) * step;
      if (diss.locate(alpha)) continue;
      double v = eval(alpha);
      if (v > best) {
        best = v;
        best_alpha = alpha;
      }
    }
    if (best > 0.0)
      best = std::max(best, golden_refine(eval, best_alpha - step, best_alpha + step));
    sups.push_back(best);
    out.sup_abs = best;
    out.sup_alpha = best_alpha;
  }
  if (sups.size() >= 2) {
    auto f = fit::loglog_fit(cfg.P_ladder, sups);
    out.tau_hat = 1.0 - f.slope;
    out.tau_residual = f.residual;
    out.low_confidence = f.low_confidence();
  } else {
    out.low_confidence = true;
  }
  if (cfg.t > 0 && cfg.mean_values.size() == cfg.P_ladder.size() &&
      cfg.P_ladder.size() >= 2) {
    auto f = fit::loglog_fit(cfg.P_ladder, cfg.mean_values);
    double trivial = std::max<double>(cfg.t, 2.0 * cfg.t - cfg.k);
    out.delta_hat = f.slope - trivial;
    out.has_delta = true;
  }
  return out;
}

}  // namespace cl::expsum
