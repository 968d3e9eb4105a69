#include "sadkit/stat_models.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "sadkit/errors.hpp"

namespace sadkit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_gaussian(double x, double mean, double variance) {
  const double d = x - mean;
  return -0.5 * std::log(2.0 * std::numbers::pi * variance) -
         d * d / (2.0 * variance);
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Gmm gmm_fit_em(std::span<const double> samples, int num_components,
               int max_iter, double tol, std::vector<double>* ll_trace) {
  if (num_components < 1) throw Error("gmm_fit_em: need at least 1 component");
  if (max_iter < 1) throw Error("gmm_fit_em: max_iter must be >= 1");
  const std::size_t n = samples.size();
  const std::size_t k = std::size_t(num_components);
  if (n < 2 * k) throw Error("gmm_fit_em: too few samples");
  if (ll_trace) ll_trace->clear();

  // Deterministic init: K-quantile means, global variance, uniform weights.
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  double mean = 0.0;
  for (double x : sorted) mean += x;
  mean /= double(n);
  double var = 0.0;
  for (double x : sorted) var += (x - mean) * (x - mean);
  var = std::max(var / double(n), kGmmVarianceFloor);

  Gmm g;
  g.weights.assign(k, 1.0 / double(k));
  g.variances.assign(k, var);
  g.means.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t idx = std::min(
        n - 1, std::size_t((double(c) + 0.5) * double(n) / double(k)));
    g.means[c] = sorted[idx];
  }

  std::vector<double> resp(n * k);
  std::vector<double> log_w(k);
  double prev_ll = kNegInf;
  for (int iter = 0; iter < max_iter; ++iter) {
    for (std::size_t c = 0; c < k; ++c) log_w[c] = std::log(g.weights[c]);

    // E step with per-sample log-sum-exp.
    double ll = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double max_term = kNegInf;
      for (std::size_t c = 0; c < k; ++c) {
        const double term =
            log_w[c] + log_gaussian(samples[i], g.means[c], g.variances[c]);
        resp[i * k + c] = term;
        max_term = std::max(max_term, term);
      }
      double sum = 0.0;
      for (std::size_t c = 0; c < k; ++c)
        sum += std::exp(resp[i * k + c] - max_term);
      const double log_norm = max_term + std::log(sum);
      ll += log_norm;
      for (std::size_t c = 0; c < k; ++c)
        resp[i * k + c] = std::exp(resp[i * k + c] - log_norm);
    }
    const double avg_ll = ll / double(n);
    if (ll_trace) ll_trace->push_back(avg_ll);

    // M step.
    for (std::size_t c = 0; c < k; ++c) {
      double nk = 0.0;
      double sum_x = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        nk += resp[i * k + c];
        sum_x += resp[i * k + c] * samples[i];
      }
      g.weights[c] = nk / double(n);
      if (nk > 0.0) {
        const double mu = sum_x / nk;
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double d = samples[i] - mu;
          ss += resp[i * k + c] * d * d;
        }
        g.means[c] = mu;
        g.variances[c] = std::max(ss / nk, kGmmVarianceFloor);
      }
    }
    // Pin the simplex invariant against accumulated rounding.
    double wsum = 0.0;
    for (double w : g.weights) wsum += w;
    for (double& w : g.weights) w /= wsum;

    if (iter > 0 && std::abs(avg_ll - prev_ll) <=
                        tol * std::max(1.0, std::abs(prev_ll)))
      break;
    prev_ll = avg_ll;
  }
  return g;
}

double gmm_logpdf(const Gmm& g, double x) {
  double max_term = kNegInf;
  std::vector<double> terms(g.num_components());
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    terms[c] =
        std::log(g.weights[c]) + log_gaussian(x, g.means[c], g.variances[c]);
    max_term = std::max(max_term, terms[c]);
  }
  if (max_term == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - max_term);
  return max_term + std::log(sum);
}

SadHmm build_sad_hmm(const Gmm& noise_gmm, const Gmm& speech_gmm,
                     double p_stay) {
  if (!(p_stay > 0.0) || p_stay > 1.0)
    throw Error("build_sad_hmm: p_stay must lie in (0,1]");
  SadHmm hmm;
  hmm.noise_emission = noise_gmm;
  hmm.speech_emission = speech_gmm;
  for (int s = 0; s < SadHmm::kNumStates; ++s) {
    const int next = s == SadHmm::kNumStates - 1 ? 0 : s + 1;
    hmm.transition[s][s] = p_stay;
    hmm.transition[s][next] = 1.0 - p_stay;
  }
  hmm.initial[0] = 0.5;
  hmm.initial[5] = 0.5;
  return hmm;
}

DecisionStream viterbi(const SadHmm& hmm, std::span<const double> observations,
                       double frame_shift) {
  const std::size_t T = observations.size();
  if (T == 0) throw Error("viterbi: empty observation sequence");
  constexpr int S = SadHmm::kNumStates;

  std::array<std::array<double, S>, S> log_a;
  for (int i = 0; i < S; ++i)
    for (int j = 0; j < S; ++j) log_a[i][j] = std::log(hmm.transition[i][j]);

  std::vector<std::array<double, S>> delta(T);
  std::vector<std::array<int, S>> psi(T);

  {
    const double bn = gmm_logpdf(hmm.noise_emission, observations[0]);
    const double bs = gmm_logpdf(hmm.speech_emission, observations[0]);
    for (int s = 0; s < S; ++s)
      delta[0][s] = std::log(hmm.initial[s]) + (SadHmm::is_speech_state(s) ? bs : bn);
  }
  for (std::size_t t = 1; t < T; ++t) {
    const double bn = gmm_logpdf(hmm.noise_emission, observations[t]);
    const double bs = gmm_logpdf(hmm.speech_emission, observations[t]);
    for (int s = 0; s < S; ++s) {
      double best = kNegInf;
      int best_prev = 0;
      for (int j = 0; j < S; ++j) {
        // Strict > keeps the lowest previous index on ties.
        const double cand = delta[t - 1][j] + log_a[j][s];
        if (cand > best) {
          best = cand;
          best_prev = j;
        }
      }
      delta[t][s] = best + (SadHmm::is_speech_state(s) ? bs : bn);
      psi[t][s] = best_prev;
    }
  }

  int state = 0;
  double best = kNegInf;
  for (int s = 0; s < S; ++s) {
    if (delta[T - 1][s] > best) {
      best = delta[T - 1][s];
      state = s;
    }
  }

  DecisionStream stream;
  stream.frame_shift = frame_shift;
  stream.speech.resize(T);
  for (std::size_t t = T; t-- > 0;) {
    stream.speech[t] = SadHmm::is_speech_state(state) ? 1 : 0;
    if (t > 0) state = psi[t][state];
  }
  return stream;
}

std::string dump_models(const SadHmm& hmm) {
  std::string out;
  auto dump_gmm = [&out](const char* prefix, const Gmm& g) {
    for (std::size_t c = 0; c < g.num_components(); ++c) {
      const std::string idx = std::to_string(c);
      out += std::string(prefix) + ".weight." + idx + "=" +
             format_double(g.weights[c]) + "\n";
      out += std::string(prefix) + ".mean." + idx + "=" +
             format_double(g.means[c]) + "\n";
      out += std::string(prefix) + ".variance." + idx + "=" +
             format_double(g.variances[c]) + "\n";
    }
  };
  dump_gmm("noise", hmm.noise_emission);
  dump_gmm("speech", hmm.speech_emission);
  for (int i = 0; i < SadHmm::kNumStates; ++i) {
    out += "transition." + std::to_string(i) + "=";
    for (int j = 0; j < SadHmm::kNumStates; ++j) {
      if (j) out += " ";
      out += format_double(hmm.transition[i][j]);
    }
    out += "\n";
  }
  out += "initial=";
  for (int s = 0; s < SadHmm::kNumStates; ++s) {
    if (s) out += " ";
    out += format_double(hmm.initial[s]);
  }
  out += "\n";
  return out;
}

}  // namespace sadkit
