#pragma once

#include <complex>
#include <cstddef>

#include "sadkit/matrix.hpp"
#include "sadkit/types.hpp"

namespace sadkit {

// One-sided STFT, frames on rows. F = fft_size/2 + 1 bins.
struct Spectrogram {
  Mat<std::complex<double>> frames;  // T x F
  double frame_shift = 0.0;          // seconds
  double frame_length = 0.0;         // seconds
  int fft_size = 0;
  int sample_rate = 0;           // Hz
  std::size_t num_samples = 0;   // length of the originating clip

  std::size_t num_frames() const { return frames.rows(); }
  std::size_t num_bins() const { return frames.cols(); }
};

struct PowerSpectrogram {
  Mat<double> frames;  // T x F, entrywise |X|^2
  double frame_shift = 0.0;
  double frame_length = 0.0;
  int fft_size = 0;
  int sample_rate = 0;
  std::size_t num_samples = 0;

  std::size_t num_frames() const { return frames.rows(); }
  std::size_t num_bins() const { return frames.cols(); }
};

// Periodic Hann analysis window; the tail frame is zero-padded so decisions
// cover the whole recording. T = ceil((n - frame_len)/shift) + 1.
// fft_size must be a power of two and hold one frame.
// Throws Error when the clip is shorter than one frame or the geometry is
// inconsistent.
Spectrogram stft(const AudioClip& clip, int fft_size, double frame_length,
                 double frame_shift);

// Weighted overlap-add inverse with per-sample window-power normalization;
// output is trimmed to the originating clip length.
AudioClip istft(const Spectrogram& spec);

PowerSpectrogram power(const Spectrogram& spec);

}  // namespace sadkit
