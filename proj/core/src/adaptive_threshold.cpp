#include "sadkit/adaptive_threshold.hpp"

#include "sadkit/errors.hpp"

namespace sadkit {

DecisionStream initial_decision(const CsbeTrack& track, double kappa) {
  if (kappa <= 0.0) throw Error("initial_decision: kappa must be positive");
  DecisionStream stream;
  stream.frame_shift = track.frame_shift;
  stream.speech.resize(track.size());
  for (std::size_t t = 0; t < track.size(); ++t) {
    const double threshold =
        kappa * (track.floor.values[t] + track.average_floor);
    stream.speech[t] = track.values[t] > threshold ? 1 : 0;
  }
  return stream;
}

TrainingPartitions partition_for_training(const CsbeTrack& track,
                                          double noise_margin,
                                          double speech_margin) {
  if (!(noise_margin > 0.0) || !(noise_margin < speech_margin))
    throw Error("partition_for_training: need 0 < noise_margin < speech_margin");

  const double noise_threshold = noise_margin * track.average_floor;
  const double speech_threshold = speech_margin * track.average_floor;

  TrainingPartitions parts;
  for (std::size_t t = 0; t < track.size(); ++t) {
    // Strict inequalities: values exactly at a threshold stay unassigned.
    if (track.values[t] < noise_threshold)
      parts.noise_log.push_back(track.log_values[t]);
    else if (track.values[t] > speech_threshold)
      parts.speech_log.push_back(track.log_values[t]);
  }
  if (parts.noise_log.empty())
    throw DegeneratePartitionError("no samples below the noise threshold");
  if (parts.speech_log.empty())
    throw DegeneratePartitionError("no samples above the speech threshold");
  return parts;
}

}  // namespace sadkit
