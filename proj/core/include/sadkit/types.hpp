#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sadkit {

// Mono audio, samples in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;  // Hz

  std::size_t size() const { return samples.size(); }
  double duration() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

enum class LabelClass : std::uint8_t { nonspeech = 0, speech = 1 };

struct Segment {
  double onset = 0.0;   // seconds
  double offset = 0.0;  // seconds
  LabelClass label = LabelClass::nonspeech;

  bool operator==(const Segment&) const = default;
};

// Ordered, non-overlapping segments. Gaps are implicitly nonspeech.
struct LabelTrack {
  std::vector<Segment> segments;

  bool operator==(const LabelTrack&) const = default;
  // Sum of segment durations of the given class.
  double total_duration(LabelClass cls) const {
    double total = 0.0;
    for (const auto& s : segments)
      if (s.label == cls) total += s.offset - s.onset;
    return total;
  }
};

// Per-frame binary speech decision at a fixed frame shift. The unit of
// exchange between decoding, smoothing, voting and scoring.
struct DecisionStream {
  std::vector<std::uint8_t> speech;  // 0 or 1
  double frame_shift = 0.0;          // seconds

  std::size_t size() const { return speech.size(); }
  bool operator==(const DecisionStream&) const = default;
};

// Per-frame real-valued scores (e.g. rank-normalized CSBE) for the
// segment aggregation rule.
struct ScoreStream {
  std::vector<double> scores;
  double frame_shift = 0.0;  // seconds

  std::size_t size() const { return scores.size(); }
};

// Throws ValidationError unless segments are sorted, non-overlapping and
// have onset < offset.
void validate(const LabelTrack& track);

}  // namespace sadkit
