#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace plcoh {

// Two aligned series of equal length. Always constructed through
// make_series_pair so the length/finiteness invariants hold afterwards.
struct SeriesPair {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t length() const noexcept { return x.size(); }
};

// Throws TooShort (length < 2) or NonFinite (any NaN/Inf).
void validate_series(std::span<const double> series, const char* name);

SeriesPair make_series_pair(std::vector<double> x, std::vector<double> y);

// Cumulative sum of the demeaned series: out[t] = sum_{i<=t} (s[i] - mean).
// The final entry is zero up to accumulation error. Compensated summation is
// used for both the mean and the running sum.
std::vector<double> build_profile(std::span<const double> series);

}  // namespace plcoh
