#include "sadkit/csbe.hpp"

#include <algorithm>
#include <cmath>

#include "sadkit/errors.hpp"

namespace sadkit {

Mat<double> subband_energies(const PowerSpectrogram& psd,
                             double band_width_hz) {
  if (band_width_hz <= 0.0)
    throw Error("subband_energies: band width must be positive");
  if (psd.sample_rate <= 0 || psd.fft_size <= 0)
    throw Error("subband_energies: invalid spectrogram metadata");

  const double nyquist = psd.sample_rate / 2.0;
  const std::size_t num_bands =
      std::max<std::size_t>(1, std::size_t(std::ceil(nyquist / band_width_hz)));
  Mat<double> bands(psd.num_frames(), num_bands, 0.0);

  const double bin_hz = double(psd.sample_rate) / psd.fft_size;
  for (std::size_t f = 0; f < psd.num_bins(); ++f) {
    const double center = f * bin_hz;
    std::size_t s = std::size_t(center / band_width_hz);
    s = std::min(s, num_bands - 1);  // the Nyquist bin closes the last band
    for (std::size_t t = 0; t < psd.num_frames(); ++t)
      bands(t, s) += psd.frames(t, f);
  }
  return bands;
}

Mat<double> smooth_energies(const Mat<double>& energies,
                            double window_seconds, double frame_shift) {
  if (window_seconds <= 0.0)
    throw Error("smooth_energies: window must be positive");
  if (frame_shift <= 0.0)
    throw Error("smooth_energies: frame shift must be positive");
  const std::size_t num_frames = energies.rows();
  const std::size_t num_bands = energies.cols();
  const std::size_t wf = std::max<std::size_t>(
      1, std::size_t(std::llround(window_seconds / frame_shift)));
  const std::size_t half_left = (wf - 1) / 2;
  const std::size_t half_right = wf / 2;

  Mat<double> out(num_frames, num_bands);
  std::vector<double> prefix(num_frames + 1);
  for (std::size_t s = 0; s < num_bands; ++s) {
    prefix[0] = 0.0;
    for (std::size_t t = 0; t < num_frames; ++t)
      prefix[t + 1] = prefix[t] + energies(t, s);
    for (std::size_t t = 0; t < num_frames; ++t) {
      const std::size_t lo = t >= half_left ? t - half_left : 0;
      const std::size_t hi = std::min(num_frames, t + half_right + 1);
      out(t, s) = (prefix[hi] - prefix[lo]) / double(hi - lo);
    }
  }
  return out;
}

std::vector<double> accumulate_csbe(const Mat<double>& smoothed) {
  std::vector<double> values(smoothed.rows(), 0.0);
  for (std::size_t t = 0; t < smoothed.rows(); ++t) {
    auto row = smoothed.row(t);
    for (std::size_t s = 0; s < row.size(); ++s)
      values[t] += row[s] / double(s + 1);
  }
  return values;
}

CsbeTrack finalize_track(std::vector<double> values,
                         std::size_t window_frames, double beta,
                         double frame_shift) {
  if (values.empty()) throw Error("finalize_track: empty track");
  CsbeTrack track;
  track.floor = track_minimum(values, window_frames, beta);
  double sum = 0.0;
  for (double v : track.floor.values) sum += v;
  track.average_floor = sum / double(track.floor.values.size());
  track.log_values.resize(values.size());
  for (std::size_t t = 0; t < values.size(); ++t)
    track.log_values[t] = std::log(std::max(values[t], kCsbeLogEpsilon));
  track.values = std::move(values);
  track.frame_shift = frame_shift;
  return track;
}

CsbeTrack csbe_track(const PowerSpectrogram& psd, const PipelineConfig& cfg) {
  const Mat<double> bands = subband_energies(psd, cfg.subband_width);
  const Mat<double> smoothed =
      smooth_energies(bands, cfg.csbe_window, psd.frame_shift);
  std::vector<double> values = accumulate_csbe(smoothed);
  const std::size_t window_frames = std::max<std::size_t>(
      1, std::size_t(std::llround(cfg.minstats_window / psd.frame_shift)));
  return finalize_track(std::move(values), window_frames,
                        cfg.minstats_smoothing, psd.frame_shift);
}

}  // namespace sadkit
