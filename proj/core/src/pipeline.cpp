#include "sadkit/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "sadkit/audio_io.hpp"
#include "sadkit/enhance.hpp"
#include "sadkit/errors.hpp"
#include "sadkit/postprocess.hpp"

namespace sadkit {

AudioClip enhance_audio(const AudioClip& clip, const PipelineConfig& cfg) {
  AudioClip out = denoise(clip, cfg.denoise_passes, cfg);
  out = highpass(out, cfg.highpass_cutoff);
  return lpc_emphasis(out, cfg.lpc_frame);
}

CsbeTrack compute_csbe_track(const AudioClip& clip,
                             const PipelineConfig& cfg) {
  const AudioClip enhanced = enhance_audio(clip, cfg);
  const Spectrogram spec =
      stft(enhanced, cfg.fft_size, cfg.frame_length, cfg.frame_shift);
  return csbe_track(power(spec), cfg);
}

DecideResult decide(const CsbeTrack& track, const PipelineConfig& cfg) {
  DecideResult result;
  result.decisions = initial_decision(track, cfg.kappa);
  if (!cfg.use_hmm) return result;

  TrainingPartitions parts;
  try {
    parts = partition_for_training(track, cfg.noise_margin, cfg.speech_margin);
  } catch (const DegeneratePartitionError&) {
    result.fallback = true;
    return result;
  }
  // gmm_fit_em needs 2K samples per class; an undersized partition is as
  // unusable as an empty one.
  const std::size_t need = 2 * std::size_t(cfg.gmm_components);
  if (parts.noise_log.size() < need || parts.speech_log.size() < need) {
    result.fallback = true;
    return result;
  }

  result.noise_gmm = gmm_fit_em(parts.noise_log, cfg.gmm_components,
                                cfg.gmm_max_iter, cfg.gmm_tol);
  result.speech_gmm = gmm_fit_em(parts.speech_log, cfg.gmm_components,
                                 cfg.gmm_max_iter, cfg.gmm_tol);
  const SadHmm hmm =
      build_sad_hmm(*result.noise_gmm, *result.speech_gmm, cfg.hmm_self_loop);
  result.decisions = viterbi(hmm, track.log_values, track.frame_shift);
  return result;
}

DetectResult detect(const AudioClip& clip, const PipelineConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  DetectResult result;
  result.track = compute_csbe_track(clip, cfg);

  if (cfg.smoothing == SmoothingMode::segment) {
    // The segment rule consumes scores, not decisions: rank-normalized CSBE.
    const ScoreStream scores =
        rank_scores(result.track.values, result.track.frame_shift);
    result.decisions = segment_aggregate(
        scores, {cfg.segment_length, cfg.segment_shift, cfg.segment_threshold});
  } else {
    DecideResult decided = decide(result.track, cfg);
    result.decisions = std::move(decided.decisions);
    result.fallback = decided.fallback;
    result.noise_gmm = std::move(decided.noise_gmm);
    result.speech_gmm = std::move(decided.speech_gmm);
    if (cfg.smoothing == SmoothingMode::median)
      result.decisions = median_smooth(result.decisions, cfg.median_window);
  }
  result.labels = frames_to_labels(result.decisions);

  const auto stop = std::chrono::steady_clock::now();
  result.audio_seconds = clip.duration();
  result.processing_seconds =
      std::chrono::duration<double>(stop - start).count();
  return result;
}

}  // namespace sadkit
