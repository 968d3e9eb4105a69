#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sadkit {

enum class SmoothingMode { none, median, segment };

// All tunables of the pipeline. Defaults follow the 8 kHz operating point;
// fields map 1:1 onto config-file keys and CLI flags.
struct PipelineConfig {
  // STFT front end
  int fft_size = 512;
  double frame_length = 0.050;  // s
  double frame_shift = 0.010;   // s

  // Wiener denoising
  int denoise_passes = 3;
  double gamma = 25.0;  // oversubtraction
  double g_min = 0.1;   // gain floor

  // minimum-statistics tracking (spectral bins and CSBE alike)
  double minstats_window = 1.5;      // s
  double minstats_smoothing = 0.85;  // recursive coefficient beta

  // time-domain filters
  double highpass_cutoff = 150.0;  // Hz
  double lpc_frame = 0.032;        // s, non-overlapping

  // cumulative sub-band energy
  double subband_width = 1000.0;  // Hz
  double csbe_window = 0.48;      // s moving average

  // adaptive threshold
  double kappa = 2.0;          // speech if CSBE > kappa*(F-CSBE + A-CSBE)
  double noise_margin = 2.0;   // noise training partition below margin*A-CSBE
  double speech_margin = 6.0;  // speech training partition above margin*A-CSBE

  // statistical models
  int gmm_components = 2;
  int gmm_max_iter = 100;
  double gmm_tol = 1e-6;
  double hmm_self_loop = 0.9;
  bool use_hmm = true;  // false: stop at the initial threshold decision

  // decision smoothing
  SmoothingMode smoothing = SmoothingMode::none;
  int median_window = 5;           // frames, odd
  double segment_length = 0.050;   // s (L)
  double segment_shift = 0.010;    // s (S)
  double segment_threshold = 0.5;  // alpha
};

// Throws ConfigError if any field is outside its documented range.
void validate(const PipelineConfig& cfg);

// Set one field from its textual key/value. Throws ConfigError on unknown
// keys, unparsable values, or out-of-range results.
void set_field(PipelineConfig& cfg, std::string_view key,
               std::string_view value);

// Field keys in declaration order.
const std::vector<std::string>& config_keys();

// Current value of a field, formatted the way the config file expects it.
std::string get_field(const PipelineConfig& cfg, std::string_view key);

// Flat key=value text. '#' starts a comment, blank lines ignored.
PipelineConfig parse_config(std::string_view text);
PipelineConfig load_config(const std::string& path);
std::string to_text(const PipelineConfig& cfg);

const char* to_string(SmoothingMode mode);

}  // namespace sadkit
