#pragma once

#include <cstdint>
#include <string>

#include "sadkit/types.hpp"

namespace sadkit {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + fp + tn + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double dcf = 0.0;
};

// Frame-wise counts of hyp against ref. Frames within `collar` seconds of a
// reference boundary are excluded from scoring (collar 0 scores everything).
// Throws on length or shift mismatch.
ConfusionCounts count_frames(const DecisionStream& hyp,
                             const DecisionStream& ref, double collar = 0.0);

// P = TP/(TP+FP), R = TP/(TP+FN), F1 = 2PR/(P+R),
// DCF = 0.75*FN/(TP+FN) + 0.25*FP/(TN+FP).
// Zero denominators yield 0 for the affected term; never an exception.
Metrics compute_metrics(const ConfusionCounts& c);

// key=value lines, percentages with 4 decimals.
std::string format_metrics_kv(const Metrics& m);
// Human-readable aligned table.
std::string format_metrics_table(const Metrics& m, const ConfusionCounts& c);

}  // namespace sadkit
