#pragma once

#include <span>
#include <vector>

#include "sadkit/types.hpp"

namespace sadkit {

// Overlapping-segment geometry for the max-aggregation rule.
struct SegmentationParams {
  double length = 0.050;    // L, seconds
  double shift = 0.010;     // S, seconds; 0 < S <= L
  double threshold = 0.5;   // alpha
};

// Majority filter over an odd window; edge windows shrink, and an even-sized
// shrunken window that ties keeps the original frame. Throws on even
// windows.
DecisionStream median_smooth(const DecisionStream& d, int window_frames);

// Segment i covers frames [i*S, i*S + L) (clipped at the end; the final
// partial segment keeps its last existing frame as the segment score).
// Segment decision d_i = (score at last frame) > alpha; a frame is speech
// iff at least one segment containing it is active.
DecisionStream segment_aggregate(const ScoreStream& scores,
                                 const SegmentationParams& params);

// Frame-wise majority over streams of equal length and shift; ties resolve
// to `tie`.
DecisionStream majority_vote(const std::vector<DecisionStream>& streams,
                             LabelClass tie = LabelClass::speech);

// Rank transform onto [0,1]: score[t] = (#values strictly below values[t])
// / (T-1). Equal values map to equal scores. Feeds segment_aggregate when
// no learned scores exist.
ScoreStream rank_scores(std::span<const double> values, double frame_shift);

}  // namespace sadkit
