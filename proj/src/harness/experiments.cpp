#include "caromlab/harness/experiments.hpp"

#include "caromlab/parallel.hpp"

namespace caromlab::harness {

nlohmann::json ExperimentReport::to_json() const {
  return nlohmann::json{{"game", game},       {"trials", trials},
                        {"successes", successes}, {"estimate", estimate},
                        {"stderr", stderr_},  {"ci_low", ci_low},
                        {"ci_high", ci_high}, {"seed", seed},
                        {"meta", meta}};
}

ExperimentReport report_from_successes(std::string game, long successes,
                                       long trials, std::uint64_t seed,
                                       nlohmann::json meta) {
  auto s = summarize_binomial(successes, trials);
  ExperimentReport r;
  r.game = std::move(game);
  r.trials = trials;
  r.successes = successes;
  r.estimate = s.estimate;
  r.stderr_ = s.stderr_;
  r.ci_low = s.ci_low;
  r.ci_high = s.ci_high;
  r.seed = seed;
  r.meta = std::move(meta);
  return r;
}

namespace {

long count_successes(long trials, const std::function<bool(Rng&)>& trial,
                     std::uint64_t seed) {
  auto results = map_trials<char>(trials, [&](long i) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    return static_cast<char>(trial(rng));
  });
  long successes = 0;
  for (char c : results) successes += c;
  return successes;
}

}  // namespace

ExperimentReport estimate_correctness(const schemes::Scheme& scheme,
                                      const Bits& x, long trials,
                                      std::uint64_t seed) {
  const auto& info = scheme.info();
  long successes = count_successes(
      trials,
      [&](Rng& rng) {
        Bits d_f = scheme.sample_function(rng);
        oracle::OnTheFlyOracle session(info.l_in, info.l_out,
                                       rng.fork(0x6F72616Cu));
        oracle::CountingOracle cp_view(session, info.cp_query_bound, "CP");
        auto state = scheme.cp(d_f, cp_view, rng);
        oracle::CountingOracle eval_view(session, info.eval_query_bound,
                                         "Eval");
        auto [next, y] = scheme.eval(std::move(state), x, eval_view, rng);
        return y == scheme.truth(d_f, x);
      },
      seed);
  return report_from_successes(
      "correctness", successes, trials, seed,
      {{"scheme", info.name}, {"x", x.hex()}, {"params", info.params}});
}

ExperimentReport estimate_mean_correctness(const schemes::Scheme& scheme,
                                           long trials, std::uint64_t seed) {
  const auto& info = scheme.info();
  long successes = count_successes(
      trials,
      [&](Rng& rng) {
        Bits d_f = scheme.sample_function(rng);
        oracle::OnTheFlyOracle session(info.l_in, info.l_out,
                                       rng.fork(0x6F72616Cu));
        oracle::CountingOracle cp_view(session, info.cp_query_bound, "CP");
        auto state = scheme.cp(d_f, cp_view, rng);
        Bits x = scheme.sample_input(rng);
        oracle::CountingOracle eval_view(session, info.eval_query_bound,
                                         "Eval");
        auto [next, y] = scheme.eval(std::move(state), x, eval_view, rng);
        return y == scheme.truth(d_f, x);
      },
      seed);
  return report_from_successes(
      "mean_correctness", successes, trials, seed,
      {{"scheme", info.name}, {"params", info.params}});
}

ExperimentReport estimate_mean_correctness_compiled(
    const schemes::Scheme& scheme, const deoraclizer::DeoraclizerConfig& config,
    long trials, std::uint64_t seed) {
  const auto& info = scheme.info();
  long successes = count_successes(
      trials,
      [&](Rng& rng) {
        Bits d_f = scheme.sample_function(rng);
        auto out = deoraclizer::compile(scheme, d_f, config, rng);
        Bits x = scheme.sample_input(rng);
        auto [program, y] =
            deoraclizer::eval_plain(scheme, std::move(out.program), x, rng);
        return y == scheme.truth(d_f, x);
      },
      seed);
  return report_from_successes(
      "mean_correctness_compiled", successes, trials, seed,
      {{"scheme", info.name},
       {"params", info.params},
       {"epsilon", config.epsilon}});
}

ExperimentReport estimate_reusability(const schemes::Scheme& scheme, int m,
                                      long trials, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("estimate_reusability: m >= 1");
  const auto& info = scheme.info();
  long successes = count_successes(
      trials,
      [&](Rng& rng) {
        Bits d_f = scheme.sample_function(rng);
        oracle::OnTheFlyOracle session(info.l_in, info.l_out,
                                       rng.fork(0x6F72616Cu));
        oracle::CountingOracle cp_view(session, info.cp_query_bound, "CP");
        auto state = scheme.cp(d_f, cp_view, rng);
        Bits x(0, info.input_bits);
        Bits y(0, info.output_bits);
        for (int i = 0; i < m; ++i) {
          x = scheme.sample_input(rng);
          oracle::CountingOracle eval_view(session, info.eval_query_bound,
                                           "Eval");
          auto [next, out] = scheme.eval(std::move(state), x, eval_view, rng);
          state = std::move(next);
          y = out;
        }
        return y == scheme.truth(d_f, x);
      },
      seed);
  return report_from_successes(
      "reusability", successes, trials, seed,
      {{"scheme", info.name}, {"m", m}, {"params", info.params}});
}

}  // namespace caromlab::harness
