#include "sadkit/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sadkit/errors.hpp"
#include "sadkit/noise_floor.hpp"

namespace sadkit {

Mat<double> wiener_gain(const PowerSpectrogram& noise_psd,
                        const PowerSpectrogram& obs_psd, double gamma,
                        double g_min) {
  if (noise_psd.num_frames() != obs_psd.num_frames() ||
      noise_psd.num_bins() != obs_psd.num_bins())
    throw Error("wiener_gain: shape mismatch");
  if (gamma < 0.0) throw Error("wiener_gain: gamma must be non-negative");
  if (g_min <= 0.0 || g_min >= 1.0)
    throw Error("wiener_gain: g_min must lie in (0,1)");

  Mat<double> gain(obs_psd.num_frames(), obs_psd.num_bins());
  for (std::size_t t = 0; t < obs_psd.num_frames(); ++t) {
    auto noise = noise_psd.frames.row(t);
    auto obs = obs_psd.frames.row(t);
    auto g = gain.row(t);
    for (std::size_t f = 0; f < obs.size(); ++f) {
      g[f] = obs[f] > 0.0
                 ? std::max(1.0 - gamma * noise[f] / obs[f], g_min)
                 : g_min;
    }
  }
  return gain;
}

Spectrogram denoise_pass(const Spectrogram& spec, const PipelineConfig& cfg) {
  const PowerSpectrogram psd = power(spec);
  const std::size_t window_frames = std::max<std::size_t>(
      1, std::size_t(std::llround(cfg.minstats_window / spec.frame_shift)));
  const PowerSpectrogram floor =
      track_minimum_per_bin(psd, window_frames, cfg.minstats_smoothing);
  const Mat<double> gain = wiener_gain(floor, psd, cfg.gamma, cfg.g_min);

  Spectrogram out = spec;
  for (std::size_t t = 0; t < spec.num_frames(); ++t) {
    auto src = spec.frames.row(t);
    auto dst = out.frames.row(t);
    auto g = gain.row(t);
    for (std::size_t f = 0; f < src.size(); ++f) dst[f] = src[f] * g[f];
  }
  return out;
}

AudioClip denoise(const AudioClip& clip, int passes,
                  const PipelineConfig& cfg) {
  if (passes < 1) throw Error("denoise: passes must be >= 1");
  AudioClip current = clip;
  for (int p = 0; p < passes; ++p) {
    Spectrogram spec =
        stft(current, cfg.fft_size, cfg.frame_length, cfg.frame_shift);
    spec = denoise_pass(spec, cfg);
    current = istft(spec);
  }
  return current;
}

AudioClip highpass(const AudioClip& clip, double cutoff_hz) {
  if (clip.sample_rate <= 0) throw Error("highpass: invalid sample rate");
  if (cutoff_hz <= 0.0 || cutoff_hz >= clip.sample_rate / 2.0)
    throw Error("highpass: cutoff must lie in (0, sample_rate/2)");

  // y[n] = a*(y[n-1] + x[n] - x[n-1]); a chosen so the magnitude response
  // is exactly -3 dB at the cutoff: a = 1/(c + sqrt(c^2 - 4c + 3)),
  // c = cos(2*pi*fc/fs).
  const double c =
      std::cos(2.0 * std::numbers::pi * cutoff_hz / clip.sample_rate);
  const double a = 1.0 / (c + std::sqrt(c * c - 4.0 * c + 3.0));

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.resize(clip.samples.size());
  double prev_x = 0.0;
  double prev_y = 0.0;
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    const double y = a * (prev_y + clip.samples[i] - prev_x);
    out.samples[i] = y;
    prev_x = clip.samples[i];
    prev_y = y;
  }
  return out;
}

AudioClip lpc_emphasis(const AudioClip& clip, double frame_seconds) {
  if (clip.sample_rate <= 0) throw Error("lpc_emphasis: invalid sample rate");
  if (frame_seconds <= 0.0)
    throw Error("lpc_emphasis: frame length must be positive");
  const std::size_t frame_len = std::max<std::size_t>(
      2, std::size_t(std::llround(frame_seconds * clip.sample_rate)));

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.resize(clip.samples.size());
  const auto& x = clip.samples;

  for (std::size_t begin = 0; begin < x.size(); begin += frame_len) {
    const std::size_t end = std::min(begin + frame_len, x.size());
    const std::size_t len = end - begin;
    // Normalized autocorrelation; r(1)/r(0) = 1 for a constant signal.
    double r0 = 0.0;
    double r1 = 0.0;
    for (std::size_t i = begin; i < end; ++i) r0 += x[i] * x[i];
    for (std::size_t i = begin + 1; i < end; ++i) r1 += x[i] * x[i - 1];
    r0 /= double(len);
    if (len > 1) r1 /= double(len - 1);
    double a1 = r0 > 0.0 ? r1 / r0 : 0.0;
    a1 = std::clamp(a1, -1.0, 1.0);
    for (std::size_t i = begin; i < end; ++i)
      out.samples[i] = i > 0 ? a1 * x[i - 1] : 0.0;
  }
  return out;
}

}  // namespace sadkit
