#include "sadkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fft.hpp"
#include "sadkit/errors.hpp"

namespace sadkit {

namespace {

// Periodic Hann, satisfies COLA when the length is a multiple of the shift.
std::vector<double> hann_periodic(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t i = 0; i < length; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * double(i) /
                               double(length));
  return w;
}

std::size_t seconds_to_samples(double seconds, int sample_rate) {
  return static_cast<std::size_t>(std::llround(seconds * sample_rate));
}

}  // namespace

Spectrogram stft(const AudioClip& clip, int fft_size, double frame_length,
                 double frame_shift) {
  if (clip.sample_rate <= 0) throw Error("stft: sample rate must be positive");
  if (fft_size <= 0 || !detail::is_power_of_two(std::size_t(fft_size)))
    throw Error("stft: fft size must be a positive power of two");
  const std::size_t frame_len = seconds_to_samples(frame_length, clip.sample_rate);
  const std::size_t shift = seconds_to_samples(frame_shift, clip.sample_rate);
  if (frame_len == 0 || shift == 0)
    throw Error("stft: frame length and shift must be at least one sample");
  if (shift > frame_len) throw Error("stft: shift exceeds frame length");
  if (frame_len > std::size_t(fft_size))
    throw Error("stft: frame does not fit the fft size");
  const std::size_t n = clip.samples.size();
  if (n < frame_len) throw Error("stft: clip shorter than one frame");

  const std::size_t num_frames = (n - frame_len + shift - 1) / shift + 1;
  const std::size_t num_bins = std::size_t(fft_size) / 2 + 1;
  const std::vector<double> window = hann_periodic(frame_len);

  Spectrogram spec;
  spec.frames = Mat<std::complex<double>>(num_frames, num_bins);
  spec.frame_shift = frame_shift;
  spec.frame_length = frame_length;
  spec.fft_size = fft_size;
  spec.sample_rate = clip.sample_rate;
  spec.num_samples = n;

  std::vector<std::complex<double>> buf(static_cast<std::size_t>(fft_size));
  for (std::size_t t = 0; t < num_frames; ++t) {
    const std::size_t start = t * shift;
    std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
    const std::size_t avail = std::min(frame_len, n - start);
    for (std::size_t i = 0; i < avail; ++i)
      buf[i] = clip.samples[start + i] * window[i];
    detail::fft_inplace(buf, /*inverse=*/false);
    auto row = spec.frames.row(t);
    for (std::size_t f = 0; f < num_bins; ++f) row[f] = buf[f];
  }
  return spec;
}

AudioClip istft(const Spectrogram& spec) {
  const std::size_t num_frames = spec.num_frames();
  const std::size_t num_bins = spec.num_bins();
  if (num_frames == 0) throw Error("istft: empty spectrogram");
  if (spec.sample_rate <= 0 || spec.fft_size <= 0 ||
      num_bins != std::size_t(spec.fft_size) / 2 + 1)
    throw Error("istft: inconsistent geometry metadata");
  const std::size_t frame_len =
      seconds_to_samples(spec.frame_length, spec.sample_rate);
  const std::size_t shift =
      seconds_to_samples(spec.frame_shift, spec.sample_rate);
  if (frame_len == 0 || shift == 0 || shift > frame_len ||
      frame_len > std::size_t(spec.fft_size))
    throw Error("istft: inconsistent geometry metadata");
  if (spec.num_samples < frame_len)
    throw Error("istft: inconsistent geometry metadata");
  if ((spec.num_samples - frame_len + shift - 1) / shift + 1 != num_frames)
    throw Error("istft: frame count does not match num_samples");

  const std::vector<double> window = hann_periodic(frame_len);
  const std::size_t span = (num_frames - 1) * shift + frame_len;
  std::vector<double> acc(span, 0.0);
  std::vector<double> wsum(span, 0.0);

  const std::size_t nfft = std::size_t(spec.fft_size);
  std::vector<std::complex<double>> buf(nfft);
  for (std::size_t t = 0; t < num_frames; ++t) {
    auto row = spec.frames.row(t);
    buf[0] = row[0];
    buf[nfft / 2] = row[nfft / 2];
    for (std::size_t f = 1; f < nfft / 2; ++f) {
      buf[f] = row[f];
      buf[nfft - f] = std::conj(row[f]);
    }
    detail::fft_inplace(buf, /*inverse=*/true);
    const std::size_t start = t * shift;
    // Weighted overlap-add: synthesis window over the analysis support,
    // normalized per sample by the accumulated squared window.
    for (std::size_t i = 0; i < frame_len; ++i) {
      const double sample = buf[i].real() / double(nfft);
      acc[start + i] += sample * window[i];
      wsum[start + i] += window[i] * window[i];
    }
  }

  AudioClip out;
  out.sample_rate = spec.sample_rate;
  out.samples.assign(spec.num_samples, 0.0);
  const std::size_t copy = std::min(spec.num_samples, span);
  for (std::size_t i = 0; i < copy; ++i)
    if (wsum[i] > 1e-12) out.samples[i] = acc[i] / wsum[i];
  return out;
}

PowerSpectrogram power(const Spectrogram& spec) {
  PowerSpectrogram psd;
  psd.frames = Mat<double>(spec.num_frames(), spec.num_bins());
  psd.frame_shift = spec.frame_shift;
  psd.frame_length = spec.frame_length;
  psd.fft_size = spec.fft_size;
  psd.sample_rate = spec.sample_rate;
  psd.num_samples = spec.num_samples;
  for (std::size_t t = 0; t < spec.num_frames(); ++t) {
    auto src = spec.frames.row(t);
    auto dst = psd.frames.row(t);
    for (std::size_t f = 0; f < src.size(); ++f) dst[f] = std::norm(src[f]);
  }
  return psd;
}

}  // namespace sadkit
