#include "series.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace plcoh {

namespace {

// Kahan-compensated accumulator; profiles of long-memory series can run to
// 1e5 terms, where naive summation visibly drifts.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = v - carry;
    const double next = sum + t;
    carry = (next - sum) - t;
    sum = next;
  }
};

}  // namespace

void validate_series(std::span<const double> series, const char* name) {
  if (series.size() < 2) {
    fail(ErrorCode::TooShort,
         std::string(name) + ": need at least 2 observations, got " +
             std::to_string(series.size()));
  }
  for (double v : series) {
    if (!std::isfinite(v)) {
      fail(ErrorCode::NonFinite,
           std::string(name) + ": input contains NaN or Inf");
    }
  }
}

SeriesPair make_series_pair(std::vector<double> x, std::vector<double> y) {
  validate_series(x, "x");
  validate_series(y, "y");
  if (x.size() != y.size()) {
    fail(ErrorCode::InvalidArgument,
         "series lengths differ: " + std::to_string(x.size()) + " vs " +
             std::to_string(y.size()));
  }
  return SeriesPair{std::move(x), std::move(y)};
}

std::vector<double> build_profile(std::span<const double> series) {
  validate_series(series, "profile input");

  CompensatedSum mean_acc;
  for (double v : series) mean_acc.add(v);
  const double mean = mean_acc.sum / static_cast<double>(series.size());

  std::vector<double> profile(series.size());
  CompensatedSum running;
  for (std::size_t t = 0; t < series.size(); ++t) {
    running.add(series[t] - mean);
    profile[t] = running.sum;
  }
  return profile;
}

}  // namespace plcoh
