#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sadkit/spectral.hpp"

namespace sadkit {

// Minimum-statistics floor of a non-negative sequence.
struct FloorTrack {
  std::vector<double> values;
  std::size_t window_frames = 0;
};

// Floor of the recursively smoothed sequence
//   p[t] = beta*p[t-1] + (1-beta)*seq[t],  p[0] = seq[0]
// over a trailing window of `window_frames` frames. O(T) amortized
// (monotone-deque sliding minimum). The floor never exceeds the smoothed
// sequence; enlarging the window never raises it.
FloorTrack track_minimum(std::span<const double> seq,
                         std::size_t window_frames, double beta);

// track_minimum applied independently to every frequency column.
PowerSpectrogram track_minimum_per_bin(const PowerSpectrogram& psd,
                                       std::size_t window_frames, double beta);

}  // namespace sadkit
