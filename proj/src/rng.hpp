#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace plcoh {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream seed for one Monte Carlo repetition. Derived only from
// (seed, rep_index), so results do not depend on thread count or the order
// repetitions are executed in.
inline std::uint64_t substream_seed(std::uint64_t seed,
                                    std::uint64_t rep_index) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (rep_index + 1));
  splitmix64(s);
  return splitmix64(s);
}

// Standard normal deviates via Box-Muller on top of mt19937_64. The draw
// sequence is fully specified (no rejection step), so output is identical
// across platforms and standard libraries.
class GaussianStream {
public:
  explicit GaussianStream(std::uint64_t stream_seed) : rng_(stream_seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0,1] keeps the log finite; u2 in [0,1).
    const double u1 =
        (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace plcoh
