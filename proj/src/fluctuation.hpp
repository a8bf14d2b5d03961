#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grid.hpp"
#include "logfit.hpp"
#include "series.hpp"

namespace plcoh {

enum class Method { Dcca, Dmca, Hxa };

const char* method_name(Method m);

// Per-method estimation settings. Defaults follow the simulation setup used
// throughout: DCCA boxes of 10..T/5 with start stride 10 on a log-spaced
// grid, DMCA odd windows up to 21, HXA lags up to 20 with the jackknife
// averaging enabled.
struct EstimateOptions {
  int s_min = 10;
  int s_max = 0;       // 0: floor(T/5)
  int box_step = 10;   // 0: non-overlapping (stride equals the box size)
  int scales_per_decade = 10;
  int s_step = 0;      // > 0: linear scale grid with this step instead
  int kappa_max = 21;
  int tau_max = 20;
  bool hxa_jackknife = true;
};

// Scale-resolved detrended (co)variance for one method. Diagonal profiles
// (a series against itself) are nonnegative at every scale; cross profiles
// are signed.
struct FluctuationProfile {
  Method method = Method::Dcca;
  ScaleGrid grid;
  std::vector<ScalePoint> entries;
  int box_step = 0;  // DCCA only
};

struct ProfileTriple {
  FluctuationProfile xy, xx, yy;
};

// Builds the default grid for `method` on a series of length T.
ScaleGrid grid_for(Method method, std::size_t length,
                   const EstimateOptions& options);

// Cross and the two auto profiles computed in a single pass; the per-box /
// per-window residuals are shared, so x == y makes all three bitwise equal.
ProfileTriple cross_profiles(Method method, const SeriesPair& pair,
                             const ScaleGrid& grid,
                             const EstimateOptions& options);

// Same, on the default grid for the method.
ProfileTriple cross_profiles(Method method, const SeriesPair& pair,
                             const EstimateOptions& options);

// Box-wise linear detrending of the profiles: per-box covariance divided by
// (s - 1), averaged over the boxes actually evaluated. Box starts stride by
// box_step; step 1 recovers the fully overlapping variant, step 0 tiles the
// series with non-overlapping boxes.
FluctuationProfile dcca_profile(const SeriesPair& pair, const ScaleGrid& grid,
                                int box_step);

// DCCA of a series with itself.
FluctuationProfile dfa_profile(std::span<const double> series,
                               const ScaleGrid& grid, int box_step);

// Centered moving-average detrending; windows must be odd. The covariance
// at window kappa averages exactly T - kappa + 1 residual products.
FluctuationProfile dmca_profile(const SeriesPair& pair, const ScaleGrid& grid);

// Height-height covariance: mean product of tau-lag profile increments,
// divided by the number of terms actually summed (T - tau).
FluctuationProfile hxa_profile(const SeriesPair& pair, const ScaleGrid& grid);

enum class ExponentKind { Hx, Hy, Hxy, Hrho };

struct HurstEstimate {
  double value = 0.0;
  ExponentKind kind = ExponentKind::Hxy;
  Method method = Method::Dcca;
  ScaleGrid grid;
  int n_points = 0;
  double residual_sse = 0.0;
};

// Bivariate exponent from a fluctuation profile: slope/2 of the log-log fit
// on |value| with zero values excluded (cross covariances are signed; the
// scaling law concerns the magnitude).
HurstEstimate hxy_from_profile(const FluctuationProfile& profile);

HurstEstimate estimate_hxy(Method method, const SeriesPair& pair,
                           const EstimateOptions& options);

}  // namespace plcoh
