#pragma once

#include <vector>

#include "sadkit/csbe.hpp"
#include "sadkit/types.hpp"

namespace sadkit {

// Frame t is speech iff values[t] > kappa * (floor[t] + average_floor).
DecisionStream initial_decision(const CsbeTrack& track, double kappa);

// Log-CSBE samples for the class models, split around the average floor:
// noise below noise_margin * A-CSBE, speech above speech_margin * A-CSBE,
// the band in between excluded (strict inequalities on both sides).
struct TrainingPartitions {
  std::vector<double> noise_log;
  std::vector<double> speech_log;
};

// Requires 0 < noise_margin < speech_margin. Throws
// DegeneratePartitionError when either partition comes out empty; callers
// fall back to initial_decision.
TrainingPartitions partition_for_training(const CsbeTrack& track,
                                          double noise_margin,
                                          double speech_margin);

}  // namespace sadkit
