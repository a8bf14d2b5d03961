#pragma once

#include <span>

namespace plcoh {

struct ScalePoint {
  double scale;
  double value;
};

// Ordinary least squares of log(value) on log(scale). Natural logarithms;
// the slope is base-invariant, the intercept is reported in nats.
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  int n_points = 0;
  double residual_sse = 0.0;
};

// Points with value <= 0 or scale <= 0 are skipped; callers that want
// magnitude scaling take |value| beforehand. Throws InsufficientPoints when
// fewer than 3 usable points remain.
LogLogFit loglog_fit(std::span<const ScalePoint> points);

}  // namespace plcoh
