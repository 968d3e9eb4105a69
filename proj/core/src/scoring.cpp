#include "sadkit/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "sadkit/errors.hpp"

namespace sadkit {

ConfusionCounts count_frames(const DecisionStream& hyp,
                             const DecisionStream& ref, double collar) {
  if (hyp.size() != ref.size())
    throw Error("count_frames: length mismatch");
  if (hyp.frame_shift != ref.frame_shift)
    throw Error("count_frames: frame shift mismatch");
  if (collar < 0.0) throw Error("count_frames: collar must be >= 0");

  const std::size_t T = ref.size();
  std::vector<std::uint8_t> scored(T, 1);
  if (collar > 0.0 && T > 0) {
    const std::size_t collar_frames =
        std::size_t(std::llround(collar / ref.frame_shift));
    for (std::size_t b = 1; b < T; ++b) {
      if (ref.speech[b] == ref.speech[b - 1]) continue;
      // Exclude collar_frames frames on each side of the boundary.
      const std::size_t lo = b >= collar_frames ? b - collar_frames : 0;
      const std::size_t hi = std::min(T, b + collar_frames);
      std::fill(scored.begin() + lo, scored.begin() + hi, 0);
    }
  }

  ConfusionCounts c;
  for (std::size_t t = 0; t < T; ++t) {
    if (!scored[t]) continue;
    if (ref.speech[t] && hyp.speech[t])
      ++c.tp;
    else if (!ref.speech[t] && hyp.speech[t])
      ++c.fp;
    else if (!ref.speech[t] && !hyp.speech[t])
      ++c.tn;
    else
      ++c.fn;
  }
  return c;
}

Metrics compute_metrics(const ConfusionCounts& c) {
  Metrics m;
  // Zero denominators yield 0 for the affected term by convention.
  const double tp = double(c.tp), fp = double(c.fp);
  const double tn = double(c.tn), fn = double(c.fn);
  m.precision = tp + fp > 0.0 ? tp / (tp + fp) : 0.0;
  m.recall = tp + fn > 0.0 ? tp / (tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  const double miss = tp + fn > 0.0 ? fn / (tp + fn) : 0.0;
  const double false_alarm = tn + fp > 0.0 ? fp / (tn + fp) : 0.0;
  m.dcf = 0.75 * miss + 0.25 * false_alarm;
  return m;
}

namespace {
std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v * 100.0);
  return buf;
}
}  // namespace

std::string format_metrics_kv(const Metrics& m) {
  std::string out;
  out += "precision=" + percent(m.precision) + "\n";
  out += "recall=" + percent(m.recall) + "\n";
  out += "f1=" + percent(m.f1) + "\n";
  out += "dcf=" + percent(m.dcf) + "\n";
  return out;
}

std::string format_metrics_table(const Metrics& m, const ConfusionCounts& c) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%-10s %10s\n"
                "%-10s %10.4f\n%-10s %10.4f\n%-10s %10.4f\n%-10s %10.4f\n"
                "counts     tp=%llu fp=%llu tn=%llu fn=%llu\n",
                "metric", "[%]", "precision", m.precision * 100.0, "recall",
                m.recall * 100.0, "f1", m.f1 * 100.0, "dcf", m.dcf * 100.0,
                static_cast<unsigned long long>(c.tp),
                static_cast<unsigned long long>(c.fp),
                static_cast<unsigned long long>(c.tn),
                static_cast<unsigned long long>(c.fn));
  return buf;
}

}  // namespace sadkit
