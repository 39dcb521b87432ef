#include "caromlab/deoraclizer/deoraclizer.hpp"

#include <cmath>
#include <set>

#include "caromlab/parallel.hpp"

namespace caromlab::deoraclizer {

int stop_bound(int cp_queries, int eval_queries, double epsilon,
               StopMode mode) {
  if (epsilon <= 0.0 || epsilon > 1.0) {
    throw std::invalid_argument("stop_bound: epsilon must be in (0,1]");
  }
  double numerator = 2.0 * cp_queries;
  if (mode == StopMode::ckp15_factor_N) numerator *= eval_queries;
  double q = numerator / epsilon;
  double r = std::round(q);
  double t = std::abs(q - r) <= 1e-6 * std::max(1.0, std::abs(q))
                 ? r
                 : std::ceil(q);
  if (t < 1.0) t = 1.0;
  return static_cast<int>(t);
}

void DeoraclizerConfig::validate() const {
  if (epsilon <= 0.0 || epsilon > 1.0) {
    throw std::invalid_argument("DeoraclizerConfig: epsilon must be in (0,1]");
  }
  if (forced_s && *forced_s < 0) {
    throw std::invalid_argument("DeoraclizerConfig: forced_s must be >= 0");
  }
}

int DeoraclizerConfig::stop_bound_for(const schemes::SchemeInfo& info) const {
  return stop_bound(info.cp_query_bound, info.eval_query_bound, epsilon, mode);
}

nlohmann::json DeoraclizedProgram::to_json() const {
  return nlohmann::json{{"state", state.to_json()},
                        {"database", database.to_json()},
                        {"tape", tape.to_json()},
                        {"s_used", s_used}};
}

DeoraclizedProgram DeoraclizedProgram::from_json(const nlohmann::json& j) {
  DeoraclizedProgram p;
  p.state = schemes::ProtectedState::from_json(j.at("state"));
  p.database = oracle::OracleDatabase::from_json(j.at("database"));
  p.tape = oracle::AnswerTape::from_json(j.at("tape"));
  p.s_used = j.at("s_used").get<int>();
  return p;
}

namespace {

// Counts the step's distinct queried inputs that lie in d_cp but were not
// recorded by any earlier test execution, then folds the step's queries into
// d_eval.
int fold_step_queries(const oracle::QueryTranscript& transcript,
                      std::size_t from, const oracle::OracleDatabase& d_cp,
                      oracle::OracleDatabase& d_eval) {
  int new_cp = 0;
  std::set<Bits> seen_this_step;
  for (std::size_t k = from; k < transcript.size(); ++k) {
    const auto& rec = transcript[k];
    if (d_cp.contains(rec.input) && !d_eval.contains(rec.input) &&
        seen_this_step.insert(rec.input).second) {
      ++new_cp;
    }
  }
  for (std::size_t k = from; k < transcript.size(); ++k) {
    d_eval.insert(transcript[k].input, transcript[k].output);
  }
  return new_cp;
}

}  // namespace

CompileOutput compile_with_session(const schemes::Scheme& scheme,
                                   const Bits& d_f,
                                   const DeoraclizerConfig& config,
                                   oracle::OnTheFlyOracle& session, Rng& rng) {
  config.validate();
  const auto& info = scheme.info();
  int t = config.stop_bound_for(info);

  schemes::ProtectedState state;
  {
    oracle::CountingOracle cp_view(session, info.cp_query_bound, "CP");
    state = scheme.cp(d_f, cp_view, rng);
  }
  oracle::OracleDatabase d_cp(info.l_in, info.l_out);
  for (const auto& rec : session.transcript()) {
    d_cp.insert(rec.input, rec.output);
  }

  int s = config.forced_s ? *config.forced_s
                          : static_cast<int>(rng.below(
                                static_cast<std::uint64_t>(t)));
  if (s >= t) {
    throw std::invalid_argument("compile: forced_s must be below the stop bound");
  }

  oracle::OracleDatabase d_eval(info.l_in, info.l_out);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) {
    Bits x = scheme.sample_input(rng);
    std::size_t mark = session.transcript().size();
    oracle::CountingOracle eval_view(session, info.eval_query_bound, "Eval");
    auto [next, y] = scheme.eval(std::move(state), x, eval_view, rng);
    state = std::move(next);
    w.push_back(fold_step_queries(session.transcript(), mark, d_cp, d_eval));
  }

  oracle::AnswerTape tape =
      oracle::AnswerTape::sample(info.eval_query_bound, info.l_out, rng);

  CompileOutput out{
      DeoraclizedProgram{std::move(state), std::move(d_eval), std::move(tape),
                         s},
      std::move(d_cp), std::move(w), t};
  return out;
}

CompileOutput compile(const schemes::Scheme& scheme, const Bits& d_f,
                      const DeoraclizerConfig& config, Rng& rng) {
  oracle::OnTheFlyOracle session(scheme.info().l_in, scheme.info().l_out,
                                 rng.fork(0x6F72616Cu));
  return compile_with_session(scheme, d_f, config, session, rng);
}

CompileOutput compile_classical_obf(const schemes::Scheme& scheme,
                                    const Bits& d_f, double epsilon,
                                    StopMode mode, Rng& rng) {
  if (!scheme.info().classical) {
    throw std::invalid_argument(
        "compile_classical_obf: scheme must be classical");
  }
  DeoraclizerConfig config;
  config.epsilon = epsilon;
  config.mode = mode;
  return compile(scheme, d_f, config, rng);
}

std::pair<DeoraclizedProgram, Bits> eval_plain(const schemes::Scheme& scheme,
                                               DeoraclizedProgram program,
                                               const Bits& x, Rng& rng) {
  oracle::ReplayOracle replay(&program.database, &program.tape);
  oracle::CountingOracle eval_view(replay, scheme.info().eval_query_bound,
                                   "Eval");
  auto [state, y] = scheme.eval(std::move(program.state), x, eval_view, rng);
  program.state = std::move(state);
  return {std::move(program), y};
}

nlohmann::json CaptureReport::to_json() const {
  return nlohmann::json{{"trials", trials},
                        {"failures", failures},
                        {"estimate", estimate},
                        {"stderr", stderr_},
                        {"bound", bound},
                        {"t_bound", t_bound},
                        {"w_histogram", w_histogram},
                        {"max_w_sum", max_w_sum},
                        {"w_sum_violations", w_sum_violations}};
}

namespace {

struct CaptureTrialOutcome {
  bool failure = false;
  std::vector<int> w;  // w_1..w_{S+1}
};

CaptureTrialOutcome run_capture_trial(const schemes::Scheme& scheme,
                                      const DeoraclizerConfig& config,
                                      std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  Bits d_f = scheme.sample_function(rng);
  oracle::OnTheFlyOracle session(scheme.info().l_in, scheme.info().l_out,
                                 rng.fork(0x6F72616Cu));
  CompileOutput out = compile_with_session(scheme, d_f, config, session, rng);

  // One further evaluation against the true oracle (the live session),
  // checking whether any query lands in D_CP \ D_Eval.
  Bits x = scheme.sample_input(rng);
  std::size_t mark = session.transcript().size();
  oracle::CountingOracle eval_view(session, scheme.info().eval_query_bound,
                                   "Eval");
  auto [state, y] =
      scheme.eval(std::move(out.program.state), x, eval_view, rng);
  (void)state;
  (void)y;

  CaptureTrialOutcome outcome;
  outcome.w = out.new_cp_queries_per_step;
  int w_final = 0;
  std::set<Bits> seen;
  for (std::size_t k = mark; k < session.transcript().size(); ++k) {
    const auto& rec = session.transcript()[k];
    if (out.d_cp.contains(rec.input) && !out.program.database.contains(rec.input) &&
        seen.insert(rec.input).second) {
      ++w_final;
    }
  }
  outcome.w.push_back(w_final);
  outcome.failure = w_final >= 1;
  return outcome;
}

}  // namespace

CaptureReport estimate_capture_failure(const schemes::Scheme& scheme,
                                       const DeoraclizerConfig& config,
                                       long trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("estimate_capture_failure: trials >= 1");
  }
  config.validate();
  CaptureReport report;
  report.trials = trials;
  report.bound = config.epsilon / 2.0;
  report.t_bound = config.stop_bound_for(scheme.info());
  report.w_histogram.assign(
      static_cast<std::size_t>(scheme.info().cp_query_bound) + 2, 0);
  int m = scheme.info().cp_query_bound;
  auto outcomes = map_trials<CaptureTrialOutcome>(trials, [&](long trial) {
    return run_capture_trial(
        scheme, config, Rng::derive(seed, static_cast<std::uint64_t>(trial)));
  });
  for (const auto& outcome : outcomes) {
    if (outcome.failure) ++report.failures;
    int w_sum = 0;
    for (int wi : outcome.w) {
      w_sum += wi;
      std::size_t bucket =
          std::min(static_cast<std::size_t>(wi), report.w_histogram.size() - 1);
      ++report.w_histogram[bucket];
    }
    if (w_sum > report.max_w_sum) report.max_w_sum = w_sum;
    if (w_sum > m) ++report.w_sum_violations;
  }
  auto s = summarize_binomial(report.failures, trials);
  report.estimate = s.estimate;
  report.stderr_ = s.stderr_;
  return report;
}

bool capture_failure_trial(const schemes::Scheme& scheme,
                           const DeoraclizerConfig& config, int forced_s,
                           std::uint64_t seed) {
  DeoraclizerConfig forced = config;
  forced.forced_s = forced_s;
  auto outcome = run_capture_trial(scheme, forced, seed);
  return outcome.failure;
}

}  // namespace caromlab::deoraclizer
