#pragma once

#include "fluctuation.hpp"

namespace plcoh {

// Squared scale-specific correlation: rho2(scale) = F_xy^2 / (F_xx F_yy).
// Bounded to [0,1] by Cauchy-Schwarz since all three profiles average the
// same per-box / per-window residual products. Scales with a zero
// denominator are dropped and counted.
struct CoherencyProfile {
  Method method = Method::Dcca;
  std::vector<ScalePoint> entries;  // value = rho^2
  std::size_t dropped_scales = 0;
};

CoherencyProfile coherency_from_triple(const ProfileTriple& triple);

CoherencyProfile coherency_profile(Method method, const SeriesPair& pair,
                                   const EstimateOptions& options);

// The power-law coherency exponent read off a coherency profile:
// rho2 ~ scale^(4 H_rho), so H_rho = slope / 4. Zero rho2 values are
// excluded from the fit rather than floored.
HurstEstimate h_rho_from_profile(const CoherencyProfile& profile,
                                 const ScaleGrid& grid);

struct JackknifeEstimate {
  HurstEstimate estimate;
  int fits_used = 0;
  int fits_skipped = 0;
};

// HXA stabilization: one fit per cutoff tau*_max in {5..tau_max}, each over
// lags 1..tau*_max, averaged with equal weights. Sub-fits without enough
// positive points are skipped and counted; throws AllFitsFailed when none
// survive. Requires tau_max >= 5.
JackknifeEstimate estimate_h_rho_hxa_jackknife(const SeriesPair& pair,
                                               const EstimateOptions& options);

// Dispatches per method; for HXA the jackknife is used when
// options.hxa_jackknife is set, a single fit over 1..tau_max otherwise.
HurstEstimate estimate_h_rho(Method method, const SeriesPair& pair,
                             const EstimateOptions& options);

// Everything the report surface needs from one pass over the data: the
// coherency exponent plus the univariate and bivariate Hurst exponents from
// the same profile triple.
struct FullEstimates {
  HurstEstimate h_rho;
  HurstEstimate h_x;
  HurstEstimate h_y;
  HurstEstimate h_xy;
  int jackknife_fits = 0;    // HXA only
  int jackknife_skips = 0;   // HXA only
};

FullEstimates estimate_all(Method method, const SeriesPair& pair,
                           const EstimateOptions& options);

}  // namespace plcoh
