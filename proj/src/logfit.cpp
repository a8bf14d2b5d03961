#include "logfit.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"

namespace plcoh {

LogLogFit loglog_fit(std::span<const ScalePoint> points) {
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& p : points) {
    if (p.scale > 0.0 && p.value > 0.0) {
      lx.push_back(std::log(p.scale));
      ly.push_back(std::log(p.value));
    }
  }
  const int n = static_cast<int>(lx.size());
  if (n < 3) {
    fail(ErrorCode::InsufficientPoints,
         "log-log fit needs at least 3 positive points, got " +
             std::to_string(n));
  }

  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;

  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = lx[i] - mx;
    sxx += dx * dx;
    sxy += dx * (ly[i] - my);
  }
  if (sxx == 0.0) {
    fail(ErrorCode::InsufficientPoints,
         "log-log fit degenerate: all scales identical");
  }

  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n_points = n;
  for (int i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    fit.residual_sse += r * r;
  }
  return fit;
}

}  // namespace plcoh
