// The piracy experiment (Setup / Splitting / Challenge / Output) for
// de-oraclized programs, and the lift that turns a plain-model pirate into
// one attacking the oracle-model scheme by performing the random test
// executions itself against the live oracle.
//
// No-communication between the two evaluators is enforced structurally:
// shares are disjoint values and each evaluator gets its own generator.

#pragma once

#include "caromlab/harness/experiments.hpp"

namespace caromlab::harness {

struct PirateShare {
  std::optional<deoraclizer::DeoraclizedProgram> program;
  std::optional<qsim::PureState> qubits;
  std::map<std::string, Bits> fields;
  std::map<std::string, std::vector<Bits>> tables;
};

// A pirate against the plain-model (de-oraclized) scheme: a splitter from the
// compiled program to two shares, plus oracle-free evaluators for each share.
struct PirateStrategy {
  std::string name;
  std::function<std::pair<PirateShare, PirateShare>(
      const deoraclizer::DeoraclizedProgram&, Rng&)>
      split;
  std::function<Bits(const PirateShare&, const Bits& x, Rng&)> eval_b;
  std::function<Bits(const PirateShare&, const Bits& x, Rng&)> eval_c;
};

// A pirate against the oracle-model scheme: the splitter additionally holds
// live oracle access during the splitting phase. Evaluators stay oracle-free.
struct CaromPirateStrategy {
  std::string name;
  std::function<std::pair<PirateShare, PirateShare>(
      schemes::ProtectedState, oracle::OracleHandle&, const schemes::Scheme&,
      Rng&)>
      split;
  std::function<Bits(const PirateShare&, const Bits& x, Rng&)> eval_b;
  std::function<Bits(const PirateShare&, const Bits& x, Rng&)> eval_c;
};

// Standard pirates for the toy schemes.
// Copies the whole (classical) compiled program to both evaluators; rejects
// programs carrying quantum state.
PirateStrategy clone_pirate(const schemes::Scheme& scheme);
// B gets the full program, C gets nothing and answers uniformly.
PirateStrategy starve_c_pirate(const schemes::Scheme& scheme);
// Splits the conjugate scheme's key qubits: B keeps the first half, C the
// rest plus the canaries; each guesses the missing key bits.
PirateStrategy split_qubits_pirate(const schemes::Scheme& scheme);

// Success probability of (split, challenge, evaluate both) where the
// challenger compiles the scheme with `config` in each trial.
ExperimentReport run_piracy_plain(const schemes::Scheme& scheme,
                                  const deoraclizer::DeoraclizerConfig& config,
                                  const PirateStrategy& pirate, long trials,
                                  std::uint64_t seed);

// The generic reduction: the lifted splitter runs S ~ {0..T-1} test
// executions against the live oracle (recording D_Eval), samples the tape,
// packages a DeoraclizedProgram, and delegates to the plain splitter. Its
// oracle use is bounded by (T-1) * N, enforced at runtime.
CaromPirateStrategy lift_pirate(const PirateStrategy& plain,
                                const deoraclizer::DeoraclizerConfig& config);

// Success probability of a pirate against the oracle-model scheme itself.
ExperimentReport run_piracy_carom(const schemes::Scheme& scheme,
                                  const CaromPirateStrategy& pirate,
                                  long trials, std::uint64_t seed);

}  // namespace caromlab::harness
