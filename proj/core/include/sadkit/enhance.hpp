#pragma once

#include "sadkit/config.hpp"
#include "sadkit/matrix.hpp"
#include "sadkit/spectral.hpp"

namespace sadkit {

// Wiener gain with oversubtraction and floor:
//   gain(t,f) = max(1 - gamma * noise(t,f) / obs(t,f), g_min)
// obs(t,f) == 0 yields g_min at that bin (convention, not an error).
// All outputs lie in [g_min, 1].
Mat<double> wiener_gain(const PowerSpectrogram& noise_psd,
                        const PowerSpectrogram& obs_psd, double gamma,
                        double g_min);

// One denoising iteration: per-bin minimum-statistics noise floor, then the
// complex frames scaled by the Wiener gains.
Spectrogram denoise_pass(const Spectrogram& spec, const PipelineConfig& cfg);

// `passes` sequential stft -> denoise_pass -> istft applications; the noise
// floor is re-estimated on the already-denoised signal each time. Output
// length equals input length.
AudioClip denoise(const AudioClip& clip, int passes,
                  const PipelineConfig& cfg);

// First-order recursive highpass, -3 dB exactly at `cutoff_hz`.
AudioClip highpass(const AudioClip& clip, double cutoff_hz);

// First-order LPC emphasis over non-overlapping frames: y[n] = a1 * x[n-1]
// with a1 = r(1)/r(0) of the frame containing n (clamped to [-1,1], zero on
// silent frames). Passes predictable content, attenuates white noise.
AudioClip lpc_emphasis(const AudioClip& clip, double frame_seconds);

}  // namespace sadkit
