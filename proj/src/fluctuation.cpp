#include "fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace plcoh {

const char* method_name(Method m) {
  switch (m) {
    case Method::Dcca: return "dcca";
    case Method::Dmca: return "dmca";
    case Method::Hxa: return "hxa";
  }
  return "?";
}

ScaleGrid grid_for(Method method, std::size_t length,
                   const EstimateOptions& options) {
  switch (method) {
    case Method::Dcca: {
      int s_max = options.s_max;
      if (s_max <= 0) s_max = static_cast<int>(length / 5);
      if (options.s_step > 0) {
        return linear_box_grid(options.s_min, s_max, options.s_step);
      }
      return box_size_grid(options.s_min, s_max, options.scales_per_decade);
    }
    case Method::Dmca:
      return window_grid(options.kappa_max);
    case Method::Hxa:
      return lag_grid(options.tau_max);
  }
  fail(ErrorCode::InvalidArgument, "unknown method");
}

namespace {

struct TripleAccumulator {
  std::vector<ScalePoint> xy, xx, yy;

  void reserve(std::size_t n) {
    xy.reserve(n);
    xx.reserve(n);
    yy.reserve(n);
  }
  void push(double scale, double vxy, double vxx, double vyy) {
    xy.push_back({scale, vxy});
    xx.push_back({scale, vxx});
    yy.push_back({scale, vyy});
  }
};

// Residual covariances of linearly detrended boxes, all three pairings at
// once. Values inside a box are shifted by the box's first element before
// fitting; residuals are unchanged and the arithmetic stays at the scale of
// within-box variation.
void dcca_scan(std::span<const double> px, std::span<const double> py,
               const ScaleGrid& grid, int box_step, TripleAccumulator& out) {
  const std::size_t T = px.size();
  if (box_step < 0) {
    fail(ErrorCode::InvalidArgument, "box_step must be >= 0");
  }
  for (int s : grid.scales) {
    if (s < 4) {
      fail(ErrorCode::DegenerateBox,
           "box size " + std::to_string(s) + " below the minimum of 4");
    }
    if (static_cast<std::size_t>(s) > T) {
      fail(ErrorCode::ScaleTooLarge, "box size " + std::to_string(s) +
                                         " exceeds series length " +
                                         std::to_string(T));
    }
    const double sd = static_cast<double>(s);
    const double center = 0.5 * (sd - 1.0);
    const double stt = sd * (sd * sd - 1.0) / 12.0;  // sum of centered t^2

    const std::size_t stride =
        box_step > 0 ? static_cast<std::size_t>(box_step)
                     : static_cast<std::size_t>(s);
    double fxy = 0.0, fxx = 0.0, fyy = 0.0;
    std::size_t n_boxes = 0;
    for (std::size_t j = 0; j + static_cast<std::size_t>(s) <= T;
         j += stride) {
      const double x0 = px[j], y0 = py[j];
      double sx = 0.0, sy = 0.0, stx = 0.0, sty = 0.0;
      for (int i = 0; i < s; ++i) {
        const double tc = static_cast<double>(i) - center;
        const double dx = px[j + static_cast<std::size_t>(i)] - x0;
        const double dy = py[j + static_cast<std::size_t>(i)] - y0;
        sx += dx;
        sy += dy;
        stx += tc * dx;
        sty += tc * dy;
      }
      const double mx = sx / sd, my = sy / sd;
      const double bx = stx / stt, by = sty / stt;
      double cxy = 0.0, cxx = 0.0, cyy = 0.0;
      for (int i = 0; i < s; ++i) {
        const double tc = static_cast<double>(i) - center;
        const double ex = px[j + static_cast<std::size_t>(i)] - x0 - mx - bx * tc;
        const double ey = py[j + static_cast<std::size_t>(i)] - y0 - my - by * tc;
        cxy += ex * ey;
        cxx += ex * ex;
        cyy += ey * ey;
      }
      fxy += cxy / (sd - 1.0);
      fxx += cxx / (sd - 1.0);
      fyy += cyy / (sd - 1.0);
      ++n_boxes;
    }
    const double nb = static_cast<double>(n_boxes);
    out.push(sd, fxy / nb, fxx / nb, fyy / nb);
  }
}

// Residual around the centered moving average, computed as the mean of local
// differences within the window so no large cumulative values are subtracted.
void dmca_scan(std::span<const double> px, std::span<const double> py,
               const ScaleGrid& grid, TripleAccumulator& out) {
  const std::size_t T = px.size();
  for (int kappa : grid.scales) {
    if (kappa % 2 == 0) {
      fail(ErrorCode::EvenWindow,
           "moving-average window must be odd, got " + std::to_string(kappa));
    }
    if (kappa < 1 || static_cast<std::size_t>(kappa) > T) {
      fail(ErrorCode::WindowTooLarge, "window " + std::to_string(kappa) +
                                          " outside 1.." + std::to_string(T));
    }
    const int half = kappa / 2;
    const double kd = static_cast<double>(kappa);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    // valid centers: i = half .. T-1-half (zero based), T - kappa + 1 terms
    for (std::size_t i = static_cast<std::size_t>(half);
         i + static_cast<std::size_t>(half) < T; ++i) {
      const std::size_t base = i - static_cast<std::size_t>(half);
      double dxsum = 0.0, dysum = 0.0;
      for (int w = 0; w < kappa; ++w) {
        dxsum += px[base + static_cast<std::size_t>(w)] - px[i];
        dysum += py[base + static_cast<std::size_t>(w)] - py[i];
      }
      // X_i - MA_i = -(mean of X_m - X_i over the window)
      const double ex = -(dxsum / kd);
      const double ey = -(dysum / kd);
      sxy += ex * ey;
      sxx += ex * ex;
      syy += ey * ey;
    }
    const double count = static_cast<double>(T - static_cast<std::size_t>(kappa) + 1);
    out.push(kd, sxy / count, sxx / count, syy / count);
  }
}

// Mean product of tau-lag increments over the T - tau available terms.
void hxa_scan(std::span<const double> px, std::span<const double> py,
              const ScaleGrid& grid, TripleAccumulator& out) {
  const std::size_t T = px.size();
  for (int tau : grid.scales) {
    if (tau < 1 || static_cast<std::size_t>(tau) >= T) {
      fail(ErrorCode::LagOutOfRange, "lag " + std::to_string(tau) +
                                         " outside 1.." +
                                         std::to_string(T - 1));
    }
    const std::size_t count = T - static_cast<std::size_t>(tau);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t t = 0; t < count; ++t) {
      const double dx = px[t + static_cast<std::size_t>(tau)] - px[t];
      const double dy = py[t + static_cast<std::size_t>(tau)] - py[t];
      sxy += dx * dy;
      sxx += dx * dx;
      syy += dy * dy;
    }
    const double cd = static_cast<double>(count);
    out.push(static_cast<double>(tau), sxy / cd, sxx / cd, syy / cd);
  }
}

ProfileTriple scan(Method method, const SeriesPair& pair,
                   const ScaleGrid& grid, int box_step) {
  const auto px = build_profile(pair.x);
  const auto py = build_profile(pair.y);

  TripleAccumulator acc;
  acc.reserve(grid.scales.size());
  switch (method) {
    case Method::Dcca: dcca_scan(px, py, grid, box_step, acc); break;
    case Method::Dmca: dmca_scan(px, py, grid, acc); break;
    case Method::Hxa: hxa_scan(px, py, grid, acc); break;
  }

  ProfileTriple triple;
  const int step = method == Method::Dcca ? box_step : 0;
  triple.xy = FluctuationProfile{method, grid, std::move(acc.xy), step};
  triple.xx = FluctuationProfile{method, grid, std::move(acc.xx), step};
  triple.yy = FluctuationProfile{method, grid, std::move(acc.yy), step};
  return triple;
}

}  // namespace

ProfileTriple cross_profiles(Method method, const SeriesPair& pair,
                             const ScaleGrid& grid,
                             const EstimateOptions& options) {
  return scan(method, pair, grid, options.box_step);
}

ProfileTriple cross_profiles(Method method, const SeriesPair& pair,
                             const EstimateOptions& options) {
  return cross_profiles(method, pair, grid_for(method, pair.length(), options),
                        options);
}

FluctuationProfile dcca_profile(const SeriesPair& pair, const ScaleGrid& grid,
                                int box_step) {
  return scan(Method::Dcca, pair, grid, box_step).xy;
}

FluctuationProfile dfa_profile(std::span<const double> series,
                               const ScaleGrid& grid, int box_step) {
  SeriesPair self{std::vector<double>(series.begin(), series.end()),
                  std::vector<double>(series.begin(), series.end())};
  return dcca_profile(self, grid, box_step);
}

FluctuationProfile dmca_profile(const SeriesPair& pair,
                                const ScaleGrid& grid) {
  return scan(Method::Dmca, pair, grid, 0).xy;
}

FluctuationProfile hxa_profile(const SeriesPair& pair, const ScaleGrid& grid) {
  return scan(Method::Hxa, pair, grid, 0).xy;
}

HurstEstimate hxy_from_profile(const FluctuationProfile& profile) {
  std::vector<ScalePoint> magnitudes;
  magnitudes.reserve(profile.entries.size());
  for (const auto& e : profile.entries) {
    if (e.value != 0.0) {
      magnitudes.push_back({e.scale, std::abs(e.value)});
    }
  }
  const LogLogFit fit = loglog_fit(magnitudes);
  HurstEstimate est;
  est.value = fit.slope / 2.0;
  est.kind = ExponentKind::Hxy;
  est.method = profile.method;
  est.grid = profile.grid;
  est.n_points = fit.n_points;
  est.residual_sse = fit.residual_sse;
  return est;
}

HurstEstimate estimate_hxy(Method method, const SeriesPair& pair,
                           const EstimateOptions& options) {
  const ScaleGrid grid = grid_for(method, pair.length(), options);
  ProfileTriple triple = cross_profiles(method, pair, grid, options);
  return hxy_from_profile(triple.xy);
}

}  // namespace plcoh
