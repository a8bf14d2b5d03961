#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace plcoh {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  real_ = fftw_alloc_real(n_);
  cplx_ = fftw_alloc_complex(n_ / 2 + 1);
  if (!real_ || !cplx_) throw std::bad_alloc();
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n_), real_,
                                   static_cast<fftw_complex*>(cplx_),
                                   FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n_),
                                   static_cast<fftw_complex*>(cplx_), real_,
                                   FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
  }
  fftw_free(real_);
  fftw_free(cplx_);
}

void RealFft::forward(std::span<const double> in,
                      std::vector<std::complex<double>>& out) {
  std::memcpy(real_, in.data(), in.size() * sizeof(double));
  std::memset(real_ + in.size(), 0, (n_ - in.size()) * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  out.resize(n_ / 2 + 1);
  std::memcpy(out.data(), cplx_, (n_ / 2 + 1) * sizeof(fftw_complex));
}

void RealFft::inverse(std::span<const std::complex<double>> in,
                      std::vector<double>& out) {
  std::memcpy(cplx_, in.data(), (n_ / 2 + 1) * sizeof(fftw_complex));
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  out.resize(n_);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = real_[i] * scale;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace plcoh
