#ifndef CIRCLELAB_FITTING_HPP
#define CIRCLELAB_FITTING_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cl::fit {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS residual in log space
  bool low_confidence() const { return residual > 0.1; }
};

// Least-squares slope of log(y) against log(x).
inline LogLogFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("loglog_fit: need >= 2 matched points");
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i] <= 0 || ys[i] <= 0)
      throw std::invalid_argument("loglog_fit: need positive data");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  double dn = static_cast<double>(n);
  double denom = dn * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("loglog_fit: degenerate abscissae");
  LogLogFit out;
  out.slope = (dn * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / dn;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = ly[i] - (out.slope * lx[i] + out.intercept);
    ss += r * r;
  }
  out.residual = std::sqrt(ss / dn);
  return out;
}

}  // namespace cl::fit

#endif
