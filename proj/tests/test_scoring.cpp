#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "sadkit/errors.hpp"
#include "sadkit/scoring.hpp"

using namespace sadkit;

namespace {

DecisionStream stream_of(std::vector<std::uint8_t> bits,
                         double shift = 0.010) {
  return DecisionStream{std::move(bits), shift};
}

}  // namespace

TEST_CASE("identical streams have no errors") {
  testutil::Rng rng(401);
  std::vector<std::uint8_t> bits(100);
  for (auto& b : bits) b = rng.bits() & 1;
  const ConfusionCounts c = count_frames(stream_of(bits), stream_of(bits));
  CHECK(c.fp == 0);
  CHECK(c.fn == 0);
  CHECK(c.total() == 100);
}

TEST_CASE("hand count: all-speech hypothesis against half-speech reference") {
  std::vector<std::uint8_t> ref(20, 0);
  for (std::size_t t = 0; t < 10; ++t) ref[t] = 1;
  const ConfusionCounts c =
      count_frames(stream_of(std::vector<std::uint8_t>(20, 1)),
                   stream_of(ref), 0.0);
  CHECK(c.tp == 10);
  CHECK(c.fp == 10);
  CHECK(c.tn == 0);
  CHECK(c.fn == 0);
}

TEST_CASE("a one-frame collar removes two frames per boundary") {
  std::vector<std::uint8_t> ref(20, 0);
  for (std::size_t t = 10; t < 20; ++t) ref[t] = 1;  // one boundary at t=10
  const DecisionStream hyp = stream_of(std::vector<std::uint8_t>(20, 1));
  const ConfusionCounts with_collar =
      count_frames(hyp, stream_of(ref), 0.010);
  CHECK(with_collar.total() == 18);  // frames 9 and 10 excluded
  const ConfusionCounts without = count_frames(hyp, stream_of(ref), 0.0);
  CHECK(without.total() == 20);
}

TEST_CASE("count_frames validates its inputs") {
  CHECK_THROWS_AS(count_frames(stream_of({1, 0}), stream_of({1, 0, 1})),
                  Error);
  CHECK_THROWS_AS(
      count_frames(stream_of({1}, 0.010), stream_of({1}, 0.020)), Error);
  CHECK_THROWS_AS(count_frames(stream_of({1}), stream_of({1}), -0.1), Error);
}

TEST_CASE("DCF fixture from the challenge formula") {
  // 0.75 * 1/4 + 0.25 * 1/6 = 0.2291667
  const Metrics m = compute_metrics({.tp = 3, .fp = 1, .tn = 5, .fn = 1});
  CHECK(m.dcf == doctest::Approx(0.2291667).epsilon(1e-7));
  CHECK(m.precision == doctest::Approx(0.75));
  CHECK(m.recall == doctest::Approx(0.75));
  CHECK(m.f1 == doctest::Approx(0.75));
}

TEST_CASE("perfect counts score perfectly") {
  const Metrics m = compute_metrics({.tp = 10, .fp = 0, .tn = 30, .fn = 0});
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 1.0);
  CHECK(m.f1 == 1.0);
  CHECK(m.dcf == 0.0);
}

TEST_CASE("zero-denominator conventions never throw") {
  SUBCASE("no speech anywhere") {
    const Metrics m = compute_metrics({.tp = 0, .fp = 0, .tn = 10, .fn = 0});
    CHECK(m.recall == 0.0);
    CHECK(m.precision == 0.0);
    CHECK(m.f1 == 0.0);
    CHECK(m.dcf == 0.0);
  }
  SUBCASE("no nonspeech anywhere") {
    const Metrics m = compute_metrics({.tp = 10, .fp = 0, .tn = 0, .fn = 0});
    CHECK(m.dcf == 0.0);
    CHECK(m.recall == 1.0);
  }
  SUBCASE("empty counts") {
    const Metrics m = compute_metrics({});
    CHECK(m.precision == 0.0);
    CHECK(m.recall == 0.0);
    CHECK(m.f1 == 0.0);
    CHECK(m.dcf == 0.0);
  }
}

TEST_CASE("DCF stays in [0,1] and vanishes only without errors") {
  testutil::Rng rng(409);
  for (int trial = 0; trial < 200; ++trial) {
    const ConfusionCounts c{rng.bits() % 50, rng.bits() % 50, rng.bits() % 50,
                            rng.bits() % 50};
    const Metrics m = compute_metrics(c);
    CHECK(m.dcf >= 0.0);
    CHECK(m.dcf <= 1.0);
    if (c.tp + c.fn > 0 && c.tn + c.fp > 0) {
      if (m.dcf == 0.0) {
        CHECK(c.fn == 0);
        CHECK(c.fp == 0);
      }
      if (c.fn == 0 && c.fp == 0) CHECK(m.dcf == 0.0);
    }
  }
}

TEST_CASE("swapping hyp and ref swaps fp and fn") {
  testutil::Rng rng(419);
  std::vector<std::uint8_t> a(80), b(80);
  for (auto& v : a) v = rng.bits() & 1;
  for (auto& v : b) v = rng.bits() & 1;
  const ConfusionCounts fwd = count_frames(stream_of(a), stream_of(b));
  const ConfusionCounts rev = count_frames(stream_of(b), stream_of(a));
  CHECK(fwd.tp == rev.tp);
  CHECK(fwd.tn == rev.tn);
  CHECK(fwd.fp == rev.fn);
  CHECK(fwd.fn == rev.fp);
}

TEST_CASE("metrics are scale free in the counts") {
  const ConfusionCounts c{.tp = 3, .fp = 2, .tn = 11, .fn = 1};
  const ConfusionCounts scaled{.tp = 21, .fp = 14, .tn = 77, .fn = 7};
  const Metrics m1 = compute_metrics(c);
  const Metrics m2 = compute_metrics(scaled);
  CHECK(m1.precision == doctest::Approx(m2.precision).epsilon(1e-12));
  CHECK(m1.recall == doctest::Approx(m2.recall).epsilon(1e-12));
  CHECK(m1.f1 == doctest::Approx(m2.f1).epsilon(1e-12));
  CHECK(m1.dcf == doctest::Approx(m2.dcf).epsilon(1e-12));
}

TEST_CASE("metric formatting carries 4-decimal percentages") {
  const Metrics m = compute_metrics({.tp = 3, .fp = 1, .tn = 5, .fn = 1});
  const std::string kv = format_metrics_kv(m);
  CHECK(kv.find("dcf=22.9167") != std::string::npos);
  CHECK(kv.find("precision=75.0000") != std::string::npos);
  const std::string table =
      format_metrics_table(m, {.tp = 3, .fp = 1, .tn = 5, .fn = 1});
  CHECK(table.find("tp=3") != std::string::npos);
}
