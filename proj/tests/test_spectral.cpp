#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "sadkit/errors.hpp"
#include "sadkit/spectral.hpp"

using namespace sadkit;

TEST_CASE("stft frame count matches the closed formula") {
  // 8 kHz, 50 ms frames, 10 ms shift, 1 s clip -> ceil((8000-400)/80)+1 = 96.
  AudioClip clip = testutil::white_noise(1.0, 8000, 0.1, 7);
  const Spectrogram spec = stft(clip, 512, 0.050, 0.010);
  CHECK(spec.num_frames() == 96);
  CHECK(spec.num_bins() == 257);
  CHECK(spec.num_samples == 8000);
}

TEST_CASE("stft of an all-zero clip is all zero") {
  AudioClip clip;
  clip.sample_rate = 8000;
  clip.samples.assign(4000, 0.0);
  const Spectrogram spec = stft(clip, 512, 0.050, 0.010);
  for (std::size_t t = 0; t < spec.num_frames(); ++t)
    for (std::size_t f = 0; f < spec.num_bins(); ++f)
      CHECK(std::abs(spec.frames(t, f)) == 0.0);
}

TEST_CASE("stft rejects clips shorter than one frame") {
  AudioClip clip;
  clip.sample_rate = 8000;
  clip.samples.assign(100, 0.1);  // 12.5 ms < 50 ms
  CHECK_THROWS_AS(stft(clip, 512, 0.050, 0.010), Error);
}

TEST_CASE("bin-centered cosine concentrates its frame energy") {
  // 512-sample frames, no zero padding: frame length 64 ms at 8 kHz.
  // Bin k=32 -> 500 Hz exactly; the Hann window spreads energy to k-1,k+1.
  const int fs = 8000;
  const double freq = 32.0 * fs / 512.0;
  AudioClip clip = testutil::tone(freq, 1.0, fs);
  const Spectrogram spec = stft(clip, 512, 512.0 / fs, 0.010);

  const std::size_t t = spec.num_frames() / 2;
  double total = 0.0;
  double near_bin = 0.0;
  for (std::size_t f = 0; f < spec.num_bins(); ++f) {
    const double p = std::norm(spec.frames(t, f));
    total += p;
    if (f >= 31 && f <= 33) near_bin += p;
  }
  CHECK(near_bin / total > 0.90);
}

TEST_CASE("stft matches the naive DFT of a windowed frame") {
  const int fs = 8000;
  AudioClip clip = testutil::white_noise(0.2, fs, 0.3, 11);
  const Spectrogram spec = stft(clip, 256, 256.0 / fs, 0.010);

  // Window the first frame by hand and run the O(N^2) oracle.
  std::vector<double> frame(256);
  for (std::size_t i = 0; i < 256; ++i) {
    const double w =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * double(i) / 256.0);
    frame[i] = clip.samples[i] * w;
  }
  const auto oracle = testutil::naive_dft(frame);
  for (std::size_t f = 0; f < spec.num_bins(); ++f)
    CHECK(std::abs(spec.frames(0, f) - oracle[f]) < 1e-9);
}

TEST_CASE("stft is linear") {
  const int fs = 8000;
  AudioClip x = testutil::white_noise(0.5, fs, 0.2, 21);
  AudioClip y = testutil::white_noise(0.5, fs, 0.2, 22);
  AudioClip combo;
  combo.sample_rate = fs;
  combo.samples.resize(x.samples.size());
  for (std::size_t i = 0; i < x.samples.size(); ++i)
    combo.samples[i] = 2.0 * x.samples[i] - 0.5 * y.samples[i];

  const Spectrogram sx = stft(x, 512, 0.050, 0.010);
  const Spectrogram sy = stft(y, 512, 0.050, 0.010);
  const Spectrogram sc = stft(combo, 512, 0.050, 0.010);
  for (std::size_t t = 0; t < sc.num_frames(); ++t)
    for (std::size_t f = 0; f < sc.num_bins(); ++f) {
      const std::complex<double> expect =
          2.0 * sx.frames(t, f) - 0.5 * sy.frames(t, f);
      CHECK(std::abs(sc.frames(t, f) - expect) < 1e-12);
    }
}

TEST_CASE("istft round trip is exact away from the edge frames") {
  AudioClip clip = testutil::white_noise(1.0, 8000, 0.3, 13);
  const Spectrogram spec = stft(clip, 512, 0.050, 0.010);
  const AudioClip back = istft(spec);
  REQUIRE(back.samples.size() == clip.samples.size());

  const std::size_t frame_len = 400;
  double max_err = 0.0;
  for (std::size_t i = frame_len; i + frame_len < clip.samples.size(); ++i)
    max_err = std::max(max_err, std::abs(back.samples[i] - clip.samples[i]));
  CHECK(max_err < 1e-6);
}

TEST_CASE("istft of a zero spectrogram is silence") {
  AudioClip clip;
  clip.sample_rate = 8000;
  clip.samples.assign(8000, 0.0);
  const AudioClip back = istft(stft(clip, 512, 0.050, 0.010));
  for (double v : back.samples) CHECK(v == 0.0);
}

TEST_CASE("single-frame spectrogram reproduces the frame") {
  // One exact frame: per-sample window normalization cancels the window
  // wherever it is nonzero (the periodic Hann is zero at sample 0).
  AudioClip clip = testutil::white_noise(0.05, 8000, 0.3, 17);
  REQUIRE(clip.samples.size() == 400);
  const Spectrogram spec = stft(clip, 512, 0.050, 0.050);
  REQUIRE(spec.num_frames() == 1);
  const AudioClip back = istft(spec);
  for (std::size_t i = 1; i < clip.samples.size(); ++i)
    CHECK(std::abs(back.samples[i] - clip.samples[i]) < 1e-9);
  CHECK(back.samples[0] == 0.0);
}

TEST_CASE("istft rejects inconsistent metadata") {
  AudioClip clip = testutil::white_noise(0.5, 8000, 0.3, 19);
  Spectrogram spec = stft(clip, 512, 0.050, 0.010);
  SUBCASE("wrong bin count") {
    spec.fft_size = 1024;
    CHECK_THROWS_AS(istft(spec), Error);
  }
  SUBCASE("wrong frame count for num_samples") {
    spec.num_samples = 123456;
    CHECK_THROWS_AS(istft(spec), Error);
  }
  SUBCASE("shift exceeding frame length") {
    spec.frame_shift = 0.2;
    CHECK_THROWS_AS(istft(spec), Error);
  }
}

TEST_CASE("power is the entrywise squared magnitude") {
  AudioClip clip = testutil::white_noise(0.2, 8000, 0.3, 23);
  Spectrogram spec = stft(clip, 512, 0.050, 0.010);
  spec.frames(0, 0) = {3.0, 4.0};
  spec.frames(0, 1) = {0.0, 0.0};
  const PowerSpectrogram psd = power(spec);
  CHECK(psd.frames(0, 0) == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(psd.frames(0, 1) == 0.0);
}

TEST_CASE("Parseval per frame against the windowed time-domain energy") {
  const int fs = 8000;
  AudioClip clip = testutil::white_noise(0.5, fs, 0.4, 29);
  const Spectrogram spec = stft(clip, 512, 0.050, 0.010);
  const PowerSpectrogram psd = power(spec);

  const std::size_t frame_len = 400;
  const std::size_t shift = 80;
  const std::size_t nfft = 512;
  for (std::size_t t = 0; t + 2 < spec.num_frames(); t += 7) {
    double time_energy = 0.0;
    for (std::size_t i = 0; i < frame_len; ++i) {
      const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi *
                                            double(i) / double(frame_len));
      const double s = clip.samples[t * shift + i] * w;
      time_energy += s * s;
    }
    // One-sided spectrum: interior bins count twice.
    double spec_energy = psd.frames(t, 0) + psd.frames(t, nfft / 2);
    for (std::size_t f = 1; f < nfft / 2; ++f)
      spec_energy += 2.0 * psd.frames(t, f);
    spec_energy /= double(nfft);
    CHECK(spec_energy ==
          doctest::Approx(time_energy).epsilon(1e-9));
  }
}
