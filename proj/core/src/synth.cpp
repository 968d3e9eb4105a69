#include "sadkit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "sadkit/errors.hpp"

namespace sadkit {

namespace {

// Distributions are hand-rolled on top of the (fully specified) mt19937_64
// stream so output is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return double(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    // Box-Muller; u clamped away from 0.
    const double u = std::max(uniform(), 1e-300);
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * std::numbers::pi * v);
  }

 private:
  std::mt19937_64 engine_;
};

constexpr double kBurstMinSeconds = 1.0;
constexpr double kBurstMaxSeconds = 2.0;
constexpr double kGapMinSeconds = 0.35;
constexpr double kNoiseSigma = 0.05;
constexpr double kTvAmplitudeDb = 6.0;
constexpr double kArPoleRadius = 0.97;
constexpr double kFadeSeconds = 0.020;
constexpr double kNoiselessSpeechRms = 0.1;
constexpr int kArWarmupSamples = 400;

std::vector<double> make_noise(const CorpusSpec& spec, std::size_t n,
                               Rng& rng) {
  std::vector<double> noise(n, 0.0);
  if (std::isinf(spec.snr_db) && spec.snr_db > 0) return noise;  // noise off

  switch (spec.noise_profile) {
    case NoiseProfile::white:
      for (double& v : noise) v = kNoiseSigma * rng.normal();
      break;
    case NoiseProfile::time_varying_white: {
      const double period = rng.uniform(10.0, 20.0);
      const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      for (std::size_t k = 0; k < n; ++k) {
        const double t = double(k) / spec.sample_rate;
        const double db =
            kTvAmplitudeDb *
            std::sin(2.0 * std::numbers::pi * t / period + phase);
        noise[k] = kNoiseSigma * std::pow(10.0, db / 20.0) * rng.normal();
      }
      break;
    }
    case NoiseProfile::band_limited: {
      const double c =
          std::exp(-2.0 * std::numbers::pi * 1000.0 / spec.sample_rate);
      double y = 0.0;
      double power = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        y = c * y + (1.0 - c) * rng.normal();
        noise[k] = y;
        power += y * y;
      }
      power /= double(n);
      const double scale = power > 0.0 ? kNoiseSigma / std::sqrt(power) : 0.0;
      for (double& v : noise) v *= scale;
      break;
    }
  }
  return noise;
}

}  // namespace

SynthRecording generate(const CorpusSpec& spec) {
  if (spec.duration <= 0.0) throw Error("generate: duration must be positive");
  if (!(spec.speech_ratio > 0.0) || !(spec.speech_ratio < 1.0))
    throw Error("generate: speech_ratio must lie in (0,1)");
  if (spec.sample_rate <= 0) throw Error("generate: invalid sample rate");

  Rng rng(spec.seed);
  const double target_speech = spec.duration * spec.speech_ratio;
  const std::size_t num_bursts = std::max<std::size_t>(
      1, std::size_t(std::llround(
             target_speech / (0.5 * (kBurstMinSeconds + kBurstMaxSeconds)))));

  const double nonspeech = spec.duration - target_speech;
  if (nonspeech < double(num_bursts + 1) * kGapMinSeconds)
    throw Error("generate: infeasible duration/speech_ratio combination");

  // Burst lengths drawn then scaled so the speech total is exact.
  std::vector<double> burst_len(num_bursts);
  double len_sum = 0.0;
  for (double& len : burst_len) {
    len = rng.uniform(kBurstMinSeconds, kBurstMaxSeconds);
    len_sum += len;
  }
  for (double& len : burst_len) len *= target_speech / len_sum;

  // Gaps get the minimum each plus a random share of the slack.
  std::vector<double> gap_len(num_bursts + 1, kGapMinSeconds);
  const double slack = nonspeech - double(num_bursts + 1) * kGapMinSeconds;
  std::vector<double> weights(num_bursts + 1);
  double weight_sum = 0.0;
  for (double& w : weights) {
    w = rng.uniform(0.2, 1.2);
    weight_sum += w;
  }
  for (std::size_t i = 0; i <= num_bursts; ++i)
    gap_len[i] += slack * weights[i] / weight_sum;

  const std::size_t n =
      std::size_t(std::llround(spec.duration * spec.sample_rate));
  std::vector<std::pair<std::size_t, std::size_t>> bursts;  // sample ranges
  double cursor = 0.0;
  for (std::size_t b = 0; b < num_bursts; ++b) {
    cursor += gap_len[b];
    const auto on = std::size_t(std::llround(cursor * spec.sample_rate));
    cursor += burst_len[b];
    const auto off =
        std::min(n, std::size_t(std::llround(cursor * spec.sample_rate)));
    bursts.emplace_back(on, off);
  }

  std::vector<double> noise = make_noise(spec, n, rng);
  std::vector<double> signal = noise;

  const std::size_t fade =
      std::size_t(std::llround(kFadeSeconds * spec.sample_rate));
  LabelTrack labels;
  for (const auto& [on, off] : bursts) {
    const std::size_t len = off - on;
    if (len == 0) continue;

    // AR(2) resonance: poles at radius kArPoleRadius, angle set by f0.
    const double f0 = rng.uniform(100.0, 800.0);
    const double theta = 2.0 * std::numbers::pi * f0 / spec.sample_rate;
    const double b1 = 2.0 * kArPoleRadius * std::cos(theta);
    const double b2 = -kArPoleRadius * kArPoleRadius;
    std::vector<double> burst(len);
    double y1 = 0.0, y2 = 0.0;
    for (int k = 0; k < kArWarmupSamples; ++k) {
      const double y = b1 * y1 + b2 * y2 + rng.normal();
      y2 = y1;
      y1 = y;
    }
    for (std::size_t k = 0; k < len; ++k) {
      const double y = b1 * y1 + b2 * y2 + rng.normal();
      y2 = y1;
      y1 = y;
      burst[k] = y;
    }
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t edge = std::min(k, len - 1 - k);
      if (edge < fade)
        burst[k] *= 0.5 - 0.5 * std::cos(std::numbers::pi * double(edge) /
                                        double(fade));
    }

    double speech_power = 0.0;
    double noise_power = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      speech_power += burst[k] * burst[k];
      noise_power += noise[on + k] * noise[on + k];
    }
    speech_power /= double(len);
    noise_power /= double(len);

    double gain;
    if (std::isinf(spec.snr_db) && spec.snr_db > 0) {
      gain = speech_power > 0.0
                 ? kNoiselessSpeechRms / std::sqrt(speech_power)
                 : 0.0;
    } else {
      // Exact segmental SNR against the noise realized inside the burst.
      gain = speech_power > 0.0
                 ? std::sqrt(noise_power * std::pow(10.0, spec.snr_db / 10.0) /
                             speech_power)
                 : 0.0;
    }
    for (std::size_t k = 0; k < len; ++k) signal[on + k] += gain * burst[k];

    labels.segments.push_back({double(on) / spec.sample_rate,
                               double(off) / spec.sample_rate,
                               LabelClass::speech});
  }

  double peak = 0.0;
  for (double v : signal) peak = std::max(peak, std::abs(v));
  if (peak > 0.99)
    for (double& v : signal) v *= 0.99 / peak;

  SynthRecording rec;
  rec.clip.sample_rate = spec.sample_rate;
  rec.clip.samples = std::move(signal);
  rec.labels = std::move(labels);
  return rec;
}

const char* to_string(NoiseProfile profile) {
  switch (profile) {
    case NoiseProfile::white: return "white";
    case NoiseProfile::time_varying_white: return "tvwhite";
    case NoiseProfile::band_limited: return "band";
  }
  return "white";
}

NoiseProfile noise_profile_from_string(std::string_view name) {
  if (name == "white") return NoiseProfile::white;
  if (name == "tvwhite") return NoiseProfile::time_varying_white;
  if (name == "band") return NoiseProfile::band_limited;
  throw Error("unknown noise profile '" + std::string(name) +
              "' (expected white|tvwhite|band)");
}

}  // namespace sadkit
