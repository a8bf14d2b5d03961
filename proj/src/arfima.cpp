#include "arfima.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <string>

#include "error.hpp"
#include "fft.hpp"
#include "rng.hpp"

namespace plcoh {

namespace {

constexpr std::size_t kDefaultTruncFloor = 1000;
constexpr std::size_t kTruncCap = 100000;

// Above this many direct multiply-adds per component the FFT path wins.
constexpr std::size_t kFftThreshold = 2'000'000;

void check_d(double d, const char* name) {
  if (!(std::abs(d) < 0.5)) {
    fail(ErrorCode::Domain, std::string(name) + " = " + std::to_string(d) +
                                " outside the admissible range (-0.5, 0.5)");
  }
}

}  // namespace

void validate_params(const ArfimaParams& p) {
  check_d(p.d1, "d1");
  check_d(p.d2, "d2");
  check_d(p.d3, "d3");
  check_d(p.d4, "d4");
  for (double s : p.sigma) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      fail(ErrorCode::InvalidArgument, "innovation sigma must be positive");
    }
  }
  if (!(p.rho23 >= -1.0 && p.rho23 <= 1.0)) {
    fail(ErrorCode::InvalidArgument,
         "rho23 = " + std::to_string(p.rho23) + " outside [-1, 1]");
  }
  if (p.length < 2) {
    fail(ErrorCode::TooShort, "series length must be >= 2");
  }
}

std::size_t resolved_n_trunc(const ArfimaParams& p) {
  if (p.n_trunc > 0) return p.n_trunc;
  return std::min(kTruncCap, std::max(kDefaultTruncFloor, p.length));
}

double theoretical_h_x(const ArfimaParams& p) { return p.d1 + 0.5; }
double theoretical_h_y(const ArfimaParams& p) { return p.d4 + 0.5; }
double theoretical_h_xy(const ArfimaParams& p) {
  return 0.5 + 0.5 * (p.d2 + p.d3);
}
double theoretical_h_rho(const ArfimaParams& p) {
  return theoretical_h_xy(p) - 0.5 * (theoretical_h_x(p) + theoretical_h_y(p));
}

std::vector<double> arfima_coefficients(double d, std::size_t n_max) {
  check_d(d, "d");
  std::vector<double> a(n_max + 1);
  a[0] = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    a[n] = a[n - 1] * (static_cast<double>(n) - 1.0 + d) /
           static_cast<double>(n);
  }
  return a;
}

Innovations generate_innovations(const ArfimaParams& p,
                                 std::uint64_t rep_index) {
  validate_params(p);
  const std::size_t n = p.length + resolved_n_trunc(p);

  GaussianStream gauss(substream_seed(p.seed, rep_index));
  Innovations inn;
  inn.eps1.resize(n);
  inn.eps2.resize(n);
  inn.eps3.resize(n);
  inn.eps4.resize(n);

  // Fixed draw order: z1 block, z2 block, eta block, z4 block. eta is drawn
  // even when rho23 = +-1 so the stream layout does not depend on rho23.
  for (std::size_t t = 0; t < n; ++t) inn.eps1[t] = p.sigma[0] * gauss.next();
  std::vector<double> z2(n);
  for (std::size_t t = 0; t < n; ++t) z2[t] = gauss.next();
  const double mix = std::sqrt(1.0 - p.rho23 * p.rho23);
  for (std::size_t t = 0; t < n; ++t) {
    const double eta = gauss.next();
    inn.eps2[t] = p.sigma[1] * z2[t];
    inn.eps3[t] = p.sigma[2] * (p.rho23 * z2[t] + mix * eta);
  }
  for (std::size_t t = 0; t < n; ++t) inn.eps4[t] = p.sigma[3] * gauss.next();
  return inn;
}

std::vector<double> truncated_convolution(std::span<const double> kernel,
                                          std::span<const double> innovations,
                                          std::size_t out_length) {
  if (kernel.empty() || out_length == 0 ||
      innovations.size() < out_length + kernel.size() - 1) {
    fail(ErrorCode::InvalidArgument,
         "convolution needs out_length + kernel - 1 innovation values");
  }
  const std::size_t k = kernel.size() - 1;
  std::vector<double> out(out_length);
  for (std::size_t t = 0; t < out_length; ++t) {
    double acc = 0.0;
    const double* inn = innovations.data() + t;
    // innovations[t + k - n] for n = 0..k, written to run forward in memory
    for (std::size_t n = 0; n <= k; ++n) acc += kernel[k - n] * inn[n];
    out[t] = acc;
  }
  return out;
}

namespace {

// One output series = IFFT(FFT(a) .* FFT(eps) + FFT(b) .* FFT(nu)) sliced to
// the fully-initialized region [K, K+T).
std::vector<double> fft_component_sum(std::span<const double> kernel_a,
                                      std::span<const double> eps_a,
                                      std::span<const double> kernel_b,
                                      std::span<const double> eps_b,
                                      std::size_t out_length) {
  const std::size_t k = kernel_a.size() - 1;
  const std::size_t full = eps_a.size() + k;  // linear convolution length
  const std::size_t n = next_pow2(full);

  thread_local std::unique_ptr<RealFft> fft;
  if (!fft || fft->size() != n) fft = std::make_unique<RealFft>(n);

  std::vector<std::complex<double>> ka, kb, ea, eb;
  fft->forward(kernel_a, ka);
  fft->forward(eps_a, ea);
  fft->forward(kernel_b, kb);
  fft->forward(eps_b, eb);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    ea[i] = ka[i] * ea[i] + kb[i] * eb[i];
  }
  std::vector<double> conv;
  fft->inverse(ea, conv);
  return std::vector<double>(conv.begin() + static_cast<std::ptrdiff_t>(k),
                             conv.begin() +
                                 static_cast<std::ptrdiff_t>(k + out_length));
}

}  // namespace

SeriesPair generate_mc_arfima(const ArfimaParams& p, std::uint64_t rep_index,
                              ConvolutionPath path) {
  validate_params(p);
  const std::size_t trunc = resolved_n_trunc(p);
  const std::size_t T = p.length;

  const auto a1 = arfima_coefficients(p.d1, trunc);
  const auto a2 = arfima_coefficients(p.d2, trunc);
  const auto a3 = arfima_coefficients(p.d3, trunc);
  const auto a4 = arfima_coefficients(p.d4, trunc);
  const Innovations inn = generate_innovations(p, rep_index);

  bool use_fft = path == ConvolutionPath::Fft;
  if (path == ConvolutionPath::Auto) {
    use_fft = T * (trunc + 1) > kFftThreshold;
  }

  std::vector<double> x, y;
  if (use_fft) {
    x = fft_component_sum(a1, inn.eps1, a2, inn.eps2, T);
    y = fft_component_sum(a3, inn.eps3, a4, inn.eps4, T);
  } else {
    x = truncated_convolution(a1, inn.eps1, T);
    const auto x2 = truncated_convolution(a2, inn.eps2, T);
    for (std::size_t t = 0; t < T; ++t) x[t] += x2[t];
    y = truncated_convolution(a3, inn.eps3, T);
    const auto y2 = truncated_convolution(a4, inn.eps4, T);
    for (std::size_t t = 0; t < T; ++t) y[t] += y2[t];
  }
  return SeriesPair{std::move(x), std::move(y)};
}

}  // namespace plcoh
