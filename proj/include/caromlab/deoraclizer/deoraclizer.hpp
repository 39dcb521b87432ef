// Oracle removal for copy-protection schemes: run CP against an on-the-fly
// random oracle, run a uniformly random number S in {0..T-1} of test
// executions recording the evaluator's queries in a database, pre-sample a
// tape of fallback answers, and package the post-test-execution state with
// (database, tape) as a plain-model program. T = ceil(2M / epsilon) where M
// bounds CP's queries; the ckp15_factor_N mode uses T = ceil(2MN / epsilon)
// as the comparison baseline.

#pragma once

#include <optional>

#include "caromlab/schemes/scheme.hpp"
#include "caromlab/stats.hpp"

namespace caromlab::deoraclizer {

enum class StopMode { random_stop_T, ckp15_factor_N };

// Number of test executions to stop at, as a function of the declared query
// bounds. Guards against float round-off pushing an exact 2M/eps over the
// next integer.
int stop_bound(int cp_queries, int eval_queries, double epsilon, StopMode mode);

struct DeoraclizerConfig {
  double epsilon = 0.1;  // target mean-correctness loss, must be in (0,1]
  int lambda = 16;
  StopMode mode = StopMode::random_stop_T;
  // Diagnostic override: compile with a fixed S instead of a random one
  // (used to demonstrate that deterministic stopping fails).
  std::optional<int> forced_s;

  void validate() const;
  int stop_bound_for(const schemes::SchemeInfo& info) const;
};

struct DeoraclizedProgram {
  schemes::ProtectedState state;      // rho_f^{S+1}
  oracle::OracleDatabase database;    // D_Eval = union of per-step records
  oracle::AnswerTape tape;            // r_1..r_N
  int s_used = 0;

  nlohmann::json to_json() const;
  static DeoraclizedProgram from_json(const nlohmann::json& j);
};

// Compiler output. Everything beyond `program` is diagnostic: the compiler
// records D_CP and per-step new-query counts for verification experiments,
// but none of it is handed to eval_plain.
struct CompileOutput {
  DeoraclizedProgram program;
  oracle::OracleDatabase d_cp;
  std::vector<int> new_cp_queries_per_step;  // w_1..w_S
  int t_bound = 1;
};

CompileOutput compile(const schemes::Scheme& scheme, const Bits& d_f,
                      const DeoraclizerConfig& config, Rng& rng);

// Variant that runs against a caller-owned live oracle session so the
// session can be used for further (verification) evaluations.
CompileOutput compile_with_session(const schemes::Scheme& scheme,
                                   const Bits& d_f,
                                   const DeoraclizerConfig& config,
                                   oracle::OnTheFlyOracle& session, Rng& rng);

// Classical-obfuscation variant of the pipeline: identical except it insists
// the scheme carries no quantum state.
CompileOutput compile_classical_obf(const schemes::Scheme& scheme,
                                    const Bits& d_f, double epsilon,
                                    StopMode mode, Rng& rng);

// Runs Eval with the replay oracle (database priority, tape fallback per
// distinct-query index). The returned program carries the residual state and
// unchanged (database, tape).
std::pair<DeoraclizedProgram, Bits> eval_plain(const schemes::Scheme& scheme,
                                               DeoraclizedProgram program,
                                               const Bits& x, Rng& rng);

struct CaptureReport {
  long trials = 0;
  long failures = 0;  // occurrences of the capture-failure event !E
  double estimate = 0.0;
  double stderr_ = 0.0;
  double bound = 0.0;  // epsilon / 2
  int t_bound = 1;
  // Histogram of per-step new-D_CP query counts w_i across all steps of all
  // trials (index = w value).
  std::vector<long> w_histogram;
  // Exact per-trial counting check: max over trials of sum_i w_i, and the
  // number of trials violating sum_i w_i <= M (must be zero).
  int max_w_sum = 0;
  long w_sum_violations = 0;

  nlohmann::json to_json() const;
};

// Per trial: compile, then run one further evaluation on x ~ D_X against the
// live oracle, flagging the event that it queries a point in D_CP \ D_Eval.
CaptureReport estimate_capture_failure(const schemes::Scheme& scheme,
                                       const DeoraclizerConfig& config,
                                       long trials, std::uint64_t seed);

// The same trial with a caller-chosen stopping count; returns whether the
// capture-failure event occurred. Used for exhaustive S-enumeration.
bool capture_failure_trial(const schemes::Scheme& scheme,
                           const DeoraclizerConfig& config, int forced_s,
                           std::uint64_t seed);

}  // namespace caromlab::deoraclizer
