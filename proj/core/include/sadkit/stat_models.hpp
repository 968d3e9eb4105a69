#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sadkit/types.hpp"

namespace sadkit {

// 1-D Gaussian mixture. Weights sum to 1 within 1e-9; variances are clamped
// at kGmmVarianceFloor.
struct Gmm {
  std::vector<double> weights;
  std::vector<double> means;
  std::vector<double> variances;

  std::size_t num_components() const { return weights.size(); }
};

inline constexpr double kGmmVarianceFloor = 1e-6;

// EM fit with deterministic initialization (K-quantile means, global
// variance, uniform weights; no RNG). The per-iteration average
// log-likelihood is non-decreasing; convergence when its change drops below
// tol * max(1, |previous|). Requires at least 2K samples.
// `ll_trace`, when given, receives the average log-likelihood after every
// iteration.
Gmm gmm_fit_em(std::span<const double> samples, int num_components,
               int max_iter = 100, double tol = 1e-6,
               std::vector<double>* ll_trace = nullptr);

// log sum_k w_k N(x; mu_k, var_k), evaluated via log-sum-exp.
double gmm_logpdf(const Gmm& g, double x);

// Two chains of 5 states each enforcing a minimum class duration:
// states 0-4 noise, 5-9 speech; state i stays with p_stay and advances to
// the next state of the loop 0->..->4->5->..->9->0 otherwise. Initial mass
// 0.5 on states 0 and 5. Emissions are the class GMMs shared by all five
// states of a class.
struct SadHmm {
  static constexpr int kNumStates = 10;
  std::array<std::array<double, kNumStates>, kNumStates> transition{};
  std::array<double, kNumStates> initial{};
  Gmm noise_emission;
  Gmm speech_emission;

  static constexpr bool is_speech_state(int s) { return s >= 5; }
};

// p_stay in (0, 1]; p_stay = 1 yields absorbing chains (degenerate but
// valid).
SadHmm build_sad_hmm(const Gmm& noise_gmm, const Gmm& speech_gmm,
                     double p_stay = 0.9);

// Max-probability state path in the log domain over log-CSBE observations;
// ties break toward the lower state index. decisions[t] = path state t is a
// speech state.
DecisionStream viterbi(const SadHmm& hmm, std::span<const double> observations,
                       double frame_shift);

// key=value dump of both GMMs and the transition matrix, for debugging.
std::string dump_models(const SadHmm& hmm);

}  // namespace sadkit
