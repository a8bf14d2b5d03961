#include "coherency.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "error.hpp"
#include "logfit.hpp"

namespace plcoh {

namespace {

// Equal-weight average of slope/4 over lag cutoffs 5..tau_max, each fit on
// the coherency points with lag <= cutoff. Metadata (n_points, sse) is taken
// from the last cutoff that produced a fit, i.e. the widest usable range.
JackknifeEstimate jackknife_from_coherency(const CoherencyProfile& coh,
                                           const ScaleGrid& grid,
                                           int tau_max) {
  if (tau_max < 5) {
    fail(ErrorCode::InvalidArgument,
         "jackknife needs tau_max >= 5, got " + std::to_string(tau_max));
  }
  JackknifeEstimate out;
  double sum = 0.0;
  for (int cutoff = 5; cutoff <= tau_max; ++cutoff) {
    std::vector<ScalePoint> window;
    window.reserve(coh.entries.size());
    for (const ScalePoint& p : coh.entries) {
      if (p.scale <= static_cast<double>(cutoff)) window.push_back(p);
    }
    try {
      const LogLogFit fit = loglog_fit(window);
      sum += fit.slope / 4.0;
      ++out.fits_used;
      out.estimate.n_points = fit.n_points;
      out.estimate.residual_sse = fit.residual_sse;
    } catch (const Error&) {
      ++out.fits_skipped;
    }
  }
  if (out.fits_used == 0) {
    fail(ErrorCode::AllFitsFailed,
         "no lag cutoff produced a usable coherency fit");
  }
  out.estimate.value = sum / out.fits_used;
  out.estimate.kind = ExponentKind::Hrho;
  out.estimate.method = Method::Hxa;
  out.estimate.grid = grid;
  return out;
}

}  // namespace

CoherencyProfile coherency_from_triple(const ProfileTriple& triple) {
  CoherencyProfile out;
  out.method = triple.xy.method;
  out.entries.reserve(triple.xy.entries.size());
  for (std::size_t i = 0; i < triple.xy.entries.size(); ++i) {
    const double vxy = triple.xy.entries[i].value;
    const double vxx = triple.xx.entries[i].value;
    const double vyy = triple.yy.entries[i].value;
    const double denom = vxx * vyy;
    if (!(denom > 0.0)) {
      ++out.dropped_scales;
      continue;
    }
    out.entries.push_back({triple.xy.entries[i].scale, vxy * vxy / denom});
  }
  if (out.entries.empty()) {
    fail(ErrorCode::DegenerateSeries,
         "coherency undefined: zero detrended variance at every scale");
  }
  return out;
}

CoherencyProfile coherency_profile(Method method, const SeriesPair& pair,
                                   const EstimateOptions& options) {
  return coherency_from_triple(cross_profiles(method, pair, options));
}

HurstEstimate h_rho_from_profile(const CoherencyProfile& profile,
                                 const ScaleGrid& grid) {
  const LogLogFit fit = loglog_fit(profile.entries);
  HurstEstimate est;
  est.value = fit.slope / 4.0;
  est.kind = ExponentKind::Hrho;
  est.method = profile.method;
  est.grid = grid;
  est.n_points = fit.n_points;
  est.residual_sse = fit.residual_sse;
  return est;
}

JackknifeEstimate estimate_h_rho_hxa_jackknife(const SeriesPair& pair,
                                               const EstimateOptions& options) {
  const ScaleGrid grid = grid_for(Method::Hxa, pair.length(), options);
  const CoherencyProfile coh =
      coherency_profile(Method::Hxa, pair, options);
  return jackknife_from_coherency(coh, grid, options.tau_max);
}

HurstEstimate estimate_h_rho(Method method, const SeriesPair& pair,
                             const EstimateOptions& options) {
  if (method == Method::Hxa && options.hxa_jackknife) {
    return estimate_h_rho_hxa_jackknife(pair, options).estimate;
  }
  const ScaleGrid grid = grid_for(method, pair.length(), options);
  const CoherencyProfile coh = coherency_profile(method, pair, options);
  return h_rho_from_profile(coh, grid);
}

FullEstimates estimate_all(Method method, const SeriesPair& pair,
                           const EstimateOptions& options) {
  const ScaleGrid grid = grid_for(method, pair.length(), options);
  const ProfileTriple triple = cross_profiles(method, pair, options);
  const CoherencyProfile coh = coherency_from_triple(triple);

  FullEstimates out;
  out.h_xy = hxy_from_profile(triple.xy);
  out.h_x = hxy_from_profile(triple.xx);
  out.h_x.kind = ExponentKind::Hx;
  out.h_y = hxy_from_profile(triple.yy);
  out.h_y.kind = ExponentKind::Hy;

  if (method == Method::Hxa && options.hxa_jackknife) {
    const JackknifeEstimate jk =
        jackknife_from_coherency(coh, grid, options.tau_max);
    out.h_rho = jk.estimate;
    out.jackknife_fits = jk.fits_used;
    out.jackknife_skips = jk.fits_skipped;
  } else {
    out.h_rho = h_rho_from_profile(coh, grid);
  }
  return out;
}

}  // namespace plcoh
