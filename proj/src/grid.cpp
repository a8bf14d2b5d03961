#include "grid.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace plcoh {

ScaleGrid box_size_grid(int s_min, int s_max, int scales_per_decade) {
  if (s_min < 4) {
    fail(ErrorCode::DegenerateBox,
         "minimum box size must be >= 4, got " + std::to_string(s_min));
  }
  if (s_max < s_min) {
    fail(ErrorCode::InvalidArgument,
         "s_max " + std::to_string(s_max) + " below s_min " +
             std::to_string(s_min));
  }
  if (scales_per_decade < 1) {
    fail(ErrorCode::InvalidArgument, "scales_per_decade must be positive");
  }

  ScaleGrid grid{GridKind::BoxSize, {}};
  const double step = std::log(10.0) / scales_per_decade;
  const double ls_min = std::log(static_cast<double>(s_min));
  for (int k = 0;; ++k) {
    const int s = static_cast<int>(std::llround(std::exp(ls_min + k * step)));
    if (s > s_max) break;
    if (grid.scales.empty() || s > grid.scales.back()) grid.scales.push_back(s);
  }
  if (grid.scales.empty() || grid.scales.back() != s_max) {
    grid.scales.push_back(s_max);
  }
  if (grid.scales.size() < 3) {
    fail(ErrorCode::InsufficientPoints,
         "box-size grid has fewer than 3 scales; widen [s_min, s_max]");
  }
  return grid;
}

ScaleGrid linear_box_grid(int s_min, int s_max, int step) {
  if (s_min < 4) {
    fail(ErrorCode::DegenerateBox,
         "minimum box size must be >= 4, got " + std::to_string(s_min));
  }
  if (s_max < s_min) {
    fail(ErrorCode::InvalidArgument,
         "s_max " + std::to_string(s_max) + " below s_min " +
             std::to_string(s_min));
  }
  if (step < 1) {
    fail(ErrorCode::InvalidArgument, "grid step must be positive");
  }

  ScaleGrid grid{GridKind::BoxSize, {}};
  for (int s = s_min; s <= s_max; s += step) grid.scales.push_back(s);
  if (grid.scales.size() < 3) {
    fail(ErrorCode::InsufficientPoints,
         "box-size grid has fewer than 3 scales; widen [s_min, s_max]");
  }
  return grid;
}

ScaleGrid window_grid(int kappa_max) {
  if (kappa_max % 2 == 0) {
    fail(ErrorCode::EvenWindow, "kappa_max must be odd, got " +
                                    std::to_string(kappa_max));
  }
  if (kappa_max < 7) {
    fail(ErrorCode::InsufficientPoints,
         "window grid 3..kappa_max needs kappa_max >= 7 for 3 scales");
  }
  ScaleGrid grid{GridKind::Window, {}};
  for (int k = 3; k <= kappa_max; k += 2) grid.scales.push_back(k);
  return grid;
}

ScaleGrid lag_grid(int tau_max) {
  if (tau_max < 3) {
    fail(ErrorCode::InsufficientPoints,
         "lag grid 1..tau_max needs tau_max >= 3 for 3 scales");
  }
  ScaleGrid grid{GridKind::Lag, {}};
  for (int t = 1; t <= tau_max; ++t) grid.scales.push_back(t);
  return grid;
}

}  // namespace plcoh
