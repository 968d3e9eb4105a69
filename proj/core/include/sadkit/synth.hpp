#pragma once

#include <cstdint>
#include <string_view>

#include "sadkit/types.hpp"

namespace sadkit {

enum class NoiseProfile { white, time_varying_white, band_limited };

// Deterministic synthetic-corpus recipe. Speech bursts are AR(2)-filtered
// noise with a 100-800 Hz resonance (strong one-lag correlation, the
// property the LPC stage exploits); each burst is scaled so its segmental
// SNR against the locally realized noise equals snr_db exactly. snr_db may
// be +infinity (noise off).
struct CorpusSpec {
  double duration = 60.0;      // seconds
  double speech_ratio = 0.30;  // in (0,1)
  double snr_db = 5.0;
  NoiseProfile noise_profile = NoiseProfile::white;
  std::uint64_t seed = 0;
  int sample_rate = 8000;
};

struct SynthRecording {
  AudioClip clip;
  LabelTrack labels;  // exact by construction
};

// Same spec (including seed) -> bit-identical output. Throws Error when the
// duration/ratio combination leaves no room for the minimum gaps or bursts.
SynthRecording generate(const CorpusSpec& spec);

const char* to_string(NoiseProfile profile);
NoiseProfile noise_profile_from_string(std::string_view name);

}  // namespace sadkit
