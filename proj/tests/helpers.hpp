#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "sadkit/types.hpp"

namespace testutil {

// Deterministic draws independent of std::*_distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u = std::max(uniform(), 1e-300);
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * std::numbers::pi * uniform());
  }
  std::uint64_t bits() { return engine_(); }
  std::size_t index(std::size_t n) { return std::size_t(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

// Naive O(N^2) DFT, the oracle for everything FFT-backed.
inline std::vector<std::complex<double>> naive_dft(
    const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double angle =
          -2.0 * std::numbers::pi * double(k) * double(i) / double(n);
      sum += x[i] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = sum;
  }
  return out;
}

inline sadkit::AudioClip tone(double freq_hz, double seconds, int sample_rate,
                              double amplitude = 0.5) {
  sadkit::AudioClip clip;
  clip.sample_rate = sample_rate;
  const auto n = std::size_t(seconds * sample_rate);
  clip.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    clip.samples[i] = amplitude * std::cos(2.0 * std::numbers::pi * freq_hz *
                                           double(i) / sample_rate);
  return clip;
}

inline sadkit::AudioClip white_noise(double seconds, int sample_rate,
                                     double sigma, std::uint64_t seed) {
  sadkit::AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(std::size_t(seconds * sample_rate));
  Rng rng(seed);
  for (double& v : clip.samples) v = sigma * rng.normal();
  return clip;
}

inline double mean_power(const std::vector<double>& x) {
  double p = 0.0;
  for (double v : x) p += v * v;
  return x.empty() ? 0.0 : p / double(x.size());
}

}  // namespace testutil
