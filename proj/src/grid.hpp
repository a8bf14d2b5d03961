#pragma once

#include <cstddef>
#include <vector>

namespace plcoh {

enum class GridKind {
  BoxSize,  // DCCA box length s
  Window,   // DMCA moving-average window kappa (odd)
  Lag,      // HXA increment lag tau
};

struct ScaleGrid {
  GridKind kind = GridKind::BoxSize;
  std::vector<int> scales;  // strictly increasing, positive
};

// Log-spaced integer box sizes, `scales_per_decade` per decade, both
// endpoints included. Scales below 4 are rejected (a linear fit in a box
// needs a nondegenerate residual).
ScaleGrid box_size_grid(int s_min, int s_max, int scales_per_decade);

// Linearly spaced box sizes s_min, s_min + step, ... up to s_max. Compared
// with the log-spaced grid this concentrates fit points at the large-scale
// end, where cross covariances of long series are noisiest.
ScaleGrid linear_box_grid(int s_min, int s_max, int step);

// All odd windows 3,5,...,kappa_max. kappa_max must be odd and >= 7 so the
// grid has at least 3 entries.
ScaleGrid window_grid(int kappa_max);

// All lags 1..tau_max.
ScaleGrid lag_grid(int tau_max);

}  // namespace plcoh
