#include "sadkit/noise_floor.hpp"

#include <deque>

#include "sadkit/errors.hpp"

namespace sadkit {

FloorTrack track_minimum(std::span<const double> seq,
                         std::size_t window_frames, double beta) {
  if (seq.empty()) throw Error("track_minimum: empty sequence");
  if (window_frames < 1) throw Error("track_minimum: window must be >= 1");
  if (beta < 0.0 || beta >= 1.0)
    throw Error("track_minimum: smoothing coefficient must be in [0,1)");

  FloorTrack track;
  track.window_frames = window_frames;
  track.values.resize(seq.size());

  // Monotone deque over the recursively smoothed sequence: front always
  // holds the index of the window minimum.
  std::deque<std::size_t> deque;
  std::vector<double> smoothed(seq.size());
  double p = seq[0];
  for (std::size_t t = 0; t < seq.size(); ++t) {
    p = t == 0 ? seq[0] : beta * p + (1.0 - beta) * seq[t];
    smoothed[t] = p;
    while (!deque.empty() && smoothed[deque.back()] >= p) deque.pop_back();
    deque.push_back(t);
    if (deque.front() + window_frames <= t) deque.pop_front();
    track.values[t] = smoothed[deque.front()];
  }
  return track;
}

PowerSpectrogram track_minimum_per_bin(const PowerSpectrogram& psd,
                                       std::size_t window_frames,
                                       double beta) {
  PowerSpectrogram floor = psd;
  const std::size_t num_frames = psd.num_frames();
  const std::size_t num_bins = psd.num_bins();
  std::vector<double> column(num_frames);
  for (std::size_t f = 0; f < num_bins; ++f) {
    for (std::size_t t = 0; t < num_frames; ++t) column[t] = psd.frames(t, f);
    const FloorTrack tracked = track_minimum(column, window_frames, beta);
    for (std::size_t t = 0; t < num_frames; ++t)
      floor.frames(t, f) = tracked.values[t];
  }
  return floor;
}

}  // namespace sadkit
