#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "series.hpp"

namespace plcoh {

// Mixed-correlated ARFIMA(0,d,0) pair. Each output series is the sum of two
// truncated MA(inf) components; cross-dependence enters only through the
// lag-0 correlation of the second and third innovation streams, giving
//   H_x = d1 + 0.5,  H_y = d4 + 0.5,  H_xy = 0.5 + (d2 + d3) / 2.
struct ArfimaParams {
  double d1 = 0.4;
  double d2 = 0.2;
  double d3 = 0.2;
  double d4 = 0.4;
  std::array<double, 4> sigma{1.0, 1.0, 1.0, 1.0};
  double rho23 = 0.0;
  std::size_t length = 1000;
  // 0 selects the default max(1000, length), capped at 100000. The MA
  // coefficients decay as n^(d-1), so the cap bounds both truncation bias
  // and cost; every run records the resolved value.
  std::size_t n_trunc = 0;
  std::uint64_t seed = 0;
};

void validate_params(const ArfimaParams& params);
std::size_t resolved_n_trunc(const ArfimaParams& params);

double theoretical_h_x(const ArfimaParams& p);
double theoretical_h_y(const ArfimaParams& p);
double theoretical_h_xy(const ArfimaParams& p);
double theoretical_h_rho(const ArfimaParams& p);

// MA(inf) weights a_0..a_n_max for memory parameter d, via the forward
// recursion a_0 = 1, a_n = a_{n-1} (n - 1 + d) / n. Direct Gamma-ratio
// evaluation overflows for large n; the recursion is exact in the same
// floating-point sense and O(n). Throws Domain when |d| >= 0.5.
std::vector<double> arfima_coefficients(double d, std::size_t n_max);

struct Innovations {
  std::vector<double> eps1, eps2, eps3, eps4;  // each length + n_trunc long
};

// Draws the four innovation streams for one repetition. eps1 and eps4 are
// independent Gaussians; eps3 = rho23 * z2 + sqrt(1 - rho23^2) * eta before
// sigma scaling, so corr(eps2, eps3) = rho23 at lag 0 and all cross-lag
// correlations vanish. Deterministic given (seed, rep_index).
Innovations generate_innovations(const ArfimaParams& params,
                                 std::uint64_t rep_index);

enum class ConvolutionPath {
  Auto,    // direct for small T * n_trunc, FFT above a fixed threshold
  Direct,  // O(T * n_trunc) reference path
  Fft,     // zero-padded FFT convolution; matches Direct to ~1e-12 relative
};

// out[t] = sum_{n=0}^{K} kernel[n] * innovations[t + K - n] with
// K = kernel.size() - 1, t = 0..out_length-1. The first K innovation values
// act as pre-sample history, so every output point sees a full kernel.
std::vector<double> truncated_convolution(std::span<const double> kernel,
                                          std::span<const double> innovations,
                                          std::size_t out_length);

SeriesPair generate_mc_arfima(const ArfimaParams& params,
                              std::uint64_t rep_index,
                              ConvolutionPath path = ConvolutionPath::Auto);

}  // namespace plcoh
