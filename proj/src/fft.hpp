#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace plcoh {

// Real-to-complex FFT of a fixed size backed by FFTW. Plan creation and
// destruction are serialized internally (FFTW planning is not thread-safe);
// execution is reentrant per instance. One instance per thread is the
// intended usage.
class RealFft {
public:
  explicit RealFft(std::size_t n);
  ~RealFft();

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const noexcept { return n_; }

  // Zero-pads `in` to size n. Output has n/2+1 bins.
  void forward(std::span<const double> in, std::vector<std::complex<double>>& out);

  // Inverse transform scaled by 1/n; writes n real samples.
  void inverse(std::span<const std::complex<double>> in, std::vector<double>& out);

private:
  std::size_t n_;
  double* real_;
  void* cplx_;  // fftw_complex*
  void* plan_fwd_;
  void* plan_inv_;
};

std::size_t next_pow2(std::size_t n);

}  // namespace plcoh
