#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "sadkit/errors.hpp"
#include "sadkit/noise_floor.hpp"
#include "sadkit/spectral.hpp"

using namespace sadkit;

namespace {

// Independent oracle: explicit smoothing pass + brute-force window minimum.
std::vector<double> brute_floor(const std::vector<double>& seq,
                                std::size_t window, double beta) {
  std::vector<double> smoothed(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t)
    smoothed[t] =
        t == 0 ? seq[0] : beta * smoothed[t - 1] + (1.0 - beta) * seq[t];
  std::vector<double> out(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const std::size_t lo = t + 1 >= window ? t + 1 - window : 0;
    out[t] = *std::min_element(smoothed.begin() + lo, smoothed.begin() + t + 1);
  }
  return out;
}

PowerSpectrogram psd_from(const Mat<double>& m) {
  PowerSpectrogram psd;
  psd.frames = m;
  psd.frame_shift = 0.010;
  psd.frame_length = 0.050;
  psd.fft_size = 2 * int(m.cols() - 1);
  psd.sample_rate = 8000;
  return psd;
}

}  // namespace

TEST_CASE("constant sequences are their own floor") {
  const std::vector<double> seq(50, 3.25);
  for (std::size_t window : {1u, 2u, 10u, 100u}) {
    const FloorTrack track = track_minimum(seq, window, 0.85);
    for (double v : track.values) CHECK(v == doctest::Approx(3.25).epsilon(1e-12));
  }
}

TEST_CASE("hand fixture: beta=0, window 2") {
  const std::vector<double> seq = {5.0, 1.0, 7.0};
  const FloorTrack track = track_minimum(seq, 2, 0.0);
  CHECK(track.values == std::vector<double>{5.0, 1.0, 1.0});
}

TEST_CASE("isolated spike leaves the floor at the base level") {
  std::vector<double> seq(40, 2.0);
  seq[10] = 50.0;
  const FloorTrack track = track_minimum(seq, 3, 0.0);
  for (std::size_t t = 0; t < seq.size(); ++t) {
    INFO("t=", t);
    CHECK(track.values[t] == 2.0);  // window always covers a non-spike frame
  }
}

TEST_CASE("matches the brute-force oracle on random input") {
  testutil::Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.index(200);
    const std::size_t window = 1 + rng.index(30);
    const double beta = rng.uniform(0.0, 0.95);
    std::vector<double> seq(n);
    for (double& v : seq) v = rng.uniform(0.0, 10.0);

    const FloorTrack track = track_minimum(seq, window, beta);
    const std::vector<double> expect = brute_floor(seq, window, beta);
    for (std::size_t t = 0; t < n; ++t)
      CHECK(track.values[t] == doctest::Approx(expect[t]).epsilon(1e-12));
  }
}

TEST_CASE("dominance: floor never exceeds the smoothed input") {
  testutil::Rng rng(103);
  std::vector<double> seq(500);
  for (double& v : seq) v = rng.uniform(0.0, 5.0);
  const double beta = 0.85;
  const FloorTrack track = track_minimum(seq, 40, beta);

  double p = seq[0];
  for (std::size_t t = 0; t < seq.size(); ++t) {
    p = t == 0 ? seq[0] : beta * p + (1.0 - beta) * seq[t];
    CHECK(track.values[t] <= p + 1e-12);
    CHECK(track.values[t] >= 0.0);
  }
}

TEST_CASE("enlarging the window never raises the floor") {
  testutil::Rng rng(107);
  std::vector<double> seq(300);
  for (double& v : seq) v = rng.uniform(0.0, 5.0);
  const FloorTrack narrow = track_minimum(seq, 10, 0.7);
  const FloorTrack wide = track_minimum(seq, 25, 0.7);
  for (std::size_t t = 0; t < seq.size(); ++t)
    CHECK(wide.values[t] <= narrow.values[t] + 1e-12);
}

TEST_CASE("shift equivariance on interior frames") {
  testutil::Rng rng(109);
  std::vector<double> seq(200);
  for (double& v : seq) v = rng.uniform(1.0, 4.0);
  const std::size_t window = 15;
  const std::size_t pad = 60;

  std::vector<double> shifted(seq.size() + pad, seq[0]);
  std::copy(seq.begin(), seq.end(), shifted.begin() + pad);
  // beta=0 so the prefix influences only through the window minimum.
  const FloorTrack base = track_minimum(seq, window, 0.0);
  const FloorTrack moved = track_minimum(shifted, window, 0.0);
  for (std::size_t t = window; t < seq.size(); ++t)
    CHECK(moved.values[t + pad] == doctest::Approx(base.values[t]).epsilon(1e-12));
}

TEST_CASE("empty input and bad parameters are rejected") {
  CHECK_THROWS_AS(track_minimum(std::vector<double>{}, 3, 0.5), Error);
  CHECK_THROWS_AS(track_minimum(std::vector<double>{1.0}, 0, 0.5), Error);
  CHECK_THROWS_AS(track_minimum(std::vector<double>{1.0}, 3, 1.0), Error);
}

TEST_CASE("per-bin floor of stationary white noise sits below the mean") {
  // Monte-Carlo oracle, fixed seed: per-bin exponential-ish powers.
  testutil::Rng rng(113);
  const std::size_t T = 600;
  const std::size_t F = 33;
  Mat<double> m(T, F);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t f = 0; f < F; ++f) {
      const double a = rng.normal();
      const double b = rng.normal();
      m(t, f) = a * a + b * b;  // |X|^2 of complex Gaussian
    }
  const PowerSpectrogram psd = psd_from(m);
  const PowerSpectrogram floor = track_minimum_per_bin(psd, 150, 0.85);

  std::vector<double> ratio(F);
  for (std::size_t f = 0; f < F; ++f) {
    double mean_power = 0.0;
    double mean_floor = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      mean_power += psd.frames(t, f);
      mean_floor += floor.frames(t, f);
    }
    ratio[f] = mean_floor / mean_power;
  }
  std::nth_element(ratio.begin(), ratio.begin() + F / 2, ratio.end());
  const double median = ratio[F / 2];
  CHECK(median >= 0.4);
  CHECK(median <= 1.0);
}

TEST_CASE("zero spectrogram has a zero floor") {
  const PowerSpectrogram psd = psd_from(Mat<double>(100, 9, 0.0));
  const PowerSpectrogram floor = track_minimum_per_bin(psd, 50, 0.85);
  for (std::size_t t = 0; t < floor.num_frames(); ++t)
    for (std::size_t f = 0; f < floor.num_bins(); ++f)
      CHECK(floor.frames(t, f) == 0.0);
}

TEST_CASE("a short tone burst does not lift its bin's floor") {
  testutil::Rng rng(127);
  const std::size_t T = 800;
  const std::size_t window = 150;
  Mat<double> noise_only(T, 3);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t f = 0; f < 3; ++f) {
      const double a = rng.normal();
      const double b = rng.normal();
      noise_only(t, f) = a * a + b * b;
    }
  Mat<double> with_burst = noise_only;
  for (std::size_t t = 300; t < 380; ++t) with_burst(t, 1) += 500.0;  // < window

  const PowerSpectrogram clean = psd_from(noise_only);
  const PowerSpectrogram burst = psd_from(with_burst);
  const PowerSpectrogram floor_clean = track_minimum_per_bin(clean, window, 0.85);
  const PowerSpectrogram floor_burst = track_minimum_per_bin(burst, window, 0.85);

  double mean_clean = 0.0;
  double mean_burst = 0.0;
  for (std::size_t t = 0; t < T; ++t) {
    mean_clean += floor_clean.frames(t, 1);
    mean_burst += floor_burst.frames(t, 1);
  }
  CHECK(mean_burst / mean_clean == doctest::Approx(1.0).epsilon(0.10));
}
