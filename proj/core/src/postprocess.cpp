#include "sadkit/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sadkit/errors.hpp"

namespace sadkit {

DecisionStream median_smooth(const DecisionStream& d, int window_frames) {
  if (window_frames < 1 || window_frames % 2 == 0)
    throw Error("median_smooth: window must be odd and >= 1");
  const std::size_t T = d.size();
  const std::size_t half = std::size_t(window_frames) / 2;

  DecisionStream out;
  out.frame_shift = d.frame_shift;
  out.speech.resize(T);
  std::size_t lo = 0;
  std::size_t hi = 0;  // exclusive
  std::size_t ones = 0;
  for (std::size_t t = 0; t < T; ++t) {
    const std::size_t want_lo = t >= half ? t - half : 0;
    const std::size_t want_hi = std::min(T, t + half + 1);
    while (hi < want_hi) ones += d.speech[hi++];
    while (lo < want_lo) ones -= d.speech[lo++];
    const std::size_t n = want_hi - want_lo;
    if (2 * ones > n)
      out.speech[t] = 1;
    else if (2 * ones < n)
      out.speech[t] = 0;
    else
      out.speech[t] = d.speech[t];  // shrunken-window tie keeps the frame
  }
  return out;
}

DecisionStream segment_aggregate(const ScoreStream& scores,
                                 const SegmentationParams& params) {
  const std::size_t T = scores.size();
  if (T == 0) throw Error("segment_aggregate: empty score stream");
  if (scores.frame_shift <= 0.0)
    throw Error("segment_aggregate: frame shift must be positive");
  if (!(params.shift > 0.0) || params.shift > params.length)
    throw Error("segment_aggregate: need 0 < shift <= length");
  const std::size_t length_frames = std::max<std::size_t>(
      1, std::size_t(std::llround(params.length / scores.frame_shift)));
  const std::size_t shift_frames = std::max<std::size_t>(
      1, std::size_t(std::llround(params.shift / scores.frame_shift)));

  DecisionStream out;
  out.frame_shift = scores.frame_shift;
  out.speech.assign(T, 0);
  for (std::size_t begin = 0; begin < T; begin += shift_frames) {
    const std::size_t end = std::min(begin + length_frames, T);
    // The segment score is the score at its last (existing) frame.
    if (scores.scores[end - 1] > params.threshold)
      std::fill(out.speech.begin() + begin, out.speech.begin() + end, 1);
  }
  return out;
}

DecisionStream majority_vote(const std::vector<DecisionStream>& streams,
                             LabelClass tie) {
  if (streams.empty()) throw Error("majority_vote: no streams");
  const std::size_t T = streams.front().size();
  for (const auto& s : streams) {
    if (s.size() != T || s.frame_shift != streams.front().frame_shift)
      throw Error("majority_vote: length or frame-shift mismatch");
  }

  DecisionStream out;
  out.frame_shift = streams.front().frame_shift;
  out.speech.resize(T);
  for (std::size_t t = 0; t < T; ++t) {
    std::size_t ones = 0;
    for (const auto& s : streams) ones += s.speech[t];
    const std::size_t zeros = streams.size() - ones;
    if (ones > zeros)
      out.speech[t] = 1;
    else if (ones < zeros)
      out.speech[t] = 0;
    else
      out.speech[t] = tie == LabelClass::speech ? 1 : 0;
  }
  return out;
}

ScoreStream rank_scores(std::span<const double> values, double frame_shift) {
  const std::size_t T = values.size();
  ScoreStream out;
  out.frame_shift = frame_shift;
  out.scores.assign(T, 0.0);
  if (T <= 1) return out;

  std::vector<std::size_t> order(T);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  const double denom = double(T - 1);
  std::size_t i = 0;
  while (i < T) {
    std::size_t j = i;
    while (j < T && values[order[j]] == values[order[i]]) ++j;
    // Equal values share the rank of the first of their run.
    for (std::size_t r = i; r < j; ++r) out.scores[order[r]] = double(i) / denom;
    i = j;
  }
  return out;
}

}  // namespace sadkit
