// Unlearnability experiment: a learner gets budgeted black-box access to a
// sampled function and must output a hypothesis that matches it on every
// input of the (enumerable) domain at the declared per-input threshold.

#pragma once

#include "caromlab/harness/experiments.hpp"

namespace caromlab::harness {

inline constexpr int kMaxLearnDomainBits = 16;

// f_a(x) = 1 iff x == a, with a uniform.
struct PointFunctionClass {
  int input_bits = 4;

  Bits sample(Rng& rng) const { return rng.bits(input_bits); }
  Bits truth(const Bits& a, const Bits& x) const {
    return Bits(x == a ? 1 : 0, 1);
  }
};

struct LearnerConfig {
  double nu = 1.0;  // per-input success threshold, noticeable
  long query_budget = 0;
};

using Hypothesis = std::function<Bits(const Bits& x)>;

struct Learner {
  std::string name;
  // Receives a budget-enforced oracle for f and the domain size.
  std::function<Hypothesis(oracle::OracleHandle&, int input_bits, Rng&)> run;
};

// Standard learners for the point-function family.
Learner exhaustive_learner();
Learner zero_query_guess_learner();
Learner budgeted_prefix_learner(long budget);

// Per trial: sample f, run the learner under its query budget, then check the
// hypothesis on every x in X. With deterministic hypotheses the per-input
// threshold check is exact for any nu in (0,1].
ExperimentReport run_learnability(const PointFunctionClass& cls,
                                  const Learner& learner,
                                  const LearnerConfig& config, long trials,
                                  std::uint64_t seed);

}  // namespace caromlab::harness
