// Game-level Monte Carlo estimators over schemes: correctness,
// mean-correctness (honest and de-oraclized), and chained-evaluation
// reusability. Every report carries a Wilson 99% interval and is reproducible
// bit-for-bit from (seed, config).

#pragma once

#include "caromlab/deoraclizer/deoraclizer.hpp"
#include "caromlab/schemes/scheme.hpp"
#include "caromlab/stats.hpp"

namespace caromlab::harness {

struct ExperimentReport {
  std::string game;
  long trials = 0;
  long successes = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  nlohmann::json meta = nlohmann::json::object();

  nlohmann::json to_json() const;
};

ExperimentReport report_from_successes(std::string game, long successes,
                                       long trials, std::uint64_t seed,
                                       nlohmann::json meta);

// Pr[f(x) <- Eval(rho_f, x)] over fresh (f, CP) samples at a fixed input.
ExperimentReport estimate_correctness(const schemes::Scheme& scheme,
                                      const Bits& x, long trials,
                                      std::uint64_t seed);

// As above with x ~ D_X inside each trial.
ExperimentReport estimate_mean_correctness(const schemes::Scheme& scheme,
                                           long trials, std::uint64_t seed);

// Mean-correctness of the de-oraclized scheme, assessed on one
// post-compilation evaluation per trial.
ExperimentReport estimate_mean_correctness_compiled(
    const schemes::Scheme& scheme, const deoraclizer::DeoraclizerConfig& config,
    long trials, std::uint64_t seed);

// m-fold chained evaluation with x_i ~ D_X, scoring the m-th output.
ExperimentReport estimate_reusability(const schemes::Scheme& scheme, int m,
                                      long trials, std::uint64_t seed);

}  // namespace caromlab::harness
