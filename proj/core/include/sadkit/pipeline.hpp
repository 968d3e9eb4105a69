#pragma once

#include <optional>

#include "sadkit/adaptive_threshold.hpp"
#include "sadkit/config.hpp"
#include "sadkit/csbe.hpp"
#include "sadkit/stat_models.hpp"
#include "sadkit/types.hpp"

namespace sadkit {

// Denoise passes, highpass, LPC emphasis.
AudioClip enhance_audio(const AudioClip& clip, const PipelineConfig& cfg);

// Enhanced signal -> STFT -> power -> CSBE criterion.
CsbeTrack compute_csbe_track(const AudioClip& clip, const PipelineConfig& cfg);

struct DecideResult {
  DecisionStream decisions;
  bool fallback = false;  // threshold-only path taken
  std::optional<Gmm> noise_gmm;
  std::optional<Gmm> speech_gmm;
};

// Threshold hypothesis, GMM training partitions, Viterbi decoding. Falls
// back to the threshold decision when the partitions are degenerate (empty
// or too small to fit the configured mixtures) or when use_hmm is off.
DecideResult decide(const CsbeTrack& track, const PipelineConfig& cfg);

struct DetectResult {
  DecisionStream decisions;  // after the configured smoothing stage
  LabelTrack labels;         // speech segments
  CsbeTrack track;
  std::optional<Gmm> noise_gmm;
  std::optional<Gmm> speech_gmm;
  bool fallback = false;
  double audio_seconds = 0.0;
  double processing_seconds = 0.0;

  double realtime_factor() const {
    return audio_seconds > 0.0 ? processing_seconds / audio_seconds : 0.0;
  }
};

// The full pipeline with wall-clock timing. Identical input and config give
// byte-identical decisions.
DetectResult detect(const AudioClip& clip, const PipelineConfig& cfg);

}  // namespace sadkit
