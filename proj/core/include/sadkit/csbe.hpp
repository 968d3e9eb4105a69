#pragma once

#include <cstddef>
#include <vector>

#include "sadkit/config.hpp"
#include "sadkit/matrix.hpp"
#include "sadkit/noise_floor.hpp"
#include "sadkit/spectral.hpp"

namespace sadkit {

// Cumulative sub-band energy per frame with its tracked floor (F-CSBE) and
// recording-level average floor (A-CSBE).
struct CsbeTrack {
  std::vector<double> values;      // linear energy, >= 0
  std::vector<double> log_values;  // ln(max(value, 1e-12))
  FloorTrack floor;                // F-CSBE
  double average_floor = 0.0;      // A-CSBE
  double frame_shift = 0.0;        // seconds

  std::size_t size() const { return values.size(); }
};

// Sum of PSD bins per band of `band_width_hz`; band s covers
// [s*bw, (s+1)*bw) by bin center frequency, S = ceil(nyquist/bw), the last
// band may be partial. A bin centered exactly at Nyquist goes into the last
// band so the bands partition the bins.
Mat<double> subband_energies(const PowerSpectrogram& psd,
                             double band_width_hz);

// Centered moving average per column, window shrunk at the edges.
// Constants are preserved.
Mat<double> smooth_energies(const Mat<double>& energies,
                            double window_seconds, double frame_shift);

// CSBE(t) = sum_{s=1..S} E(t,s) / s  (1-based band weight).
std::vector<double> accumulate_csbe(const Mat<double>& smoothed);

// Attach the minimum-statistics floor, its mean, and the log values.
CsbeTrack finalize_track(std::vector<double> values,
                         std::size_t window_frames, double beta,
                         double frame_shift);

// Full criterion from a power spectrogram using the config's band width,
// smoothing window and min-stats parameters.
CsbeTrack csbe_track(const PowerSpectrogram& psd, const PipelineConfig& cfg);

inline constexpr double kCsbeLogEpsilon = 1e-12;

}  // namespace sadkit
