#include "caromlab/harness/piracy.hpp"

#include "caromlab/oracle/query.hpp"
#include "caromlab/parallel.hpp"
#include "caromlab/schemes/conjugate.hpp"

namespace caromlab::harness {

namespace {

// Honest plain-model evaluation of a full program share.
Bits eval_program_share(const schemes::Scheme& scheme,
                        const PirateShare& share, const Bits& x, Rng& rng) {
  auto [program, y] =
      deoraclizer::eval_plain(scheme, *share.program, x, rng);
  (void)program;
  return y;
}

}  // namespace

PirateStrategy clone_pirate(const schemes::Scheme& scheme) {
  PirateStrategy p;
  p.name = "clone";
  p.split = [](const deoraclizer::DeoraclizedProgram& program, Rng&) {
    if (program.state.quantum) {
      throw std::invalid_argument(
          "clone pirate: cannot clone a quantum program state");
    }
    PirateShare b;
    b.program = program;
    PirateShare c;
    c.program = program;
    return std::make_pair(std::move(b), std::move(c));
  };
  auto eval = [&scheme](const PirateShare& share, const Bits& x, Rng& rng) {
    return eval_program_share(scheme, share, x, rng);
  };
  p.eval_b = eval;
  p.eval_c = eval;
  return p;
}

PirateStrategy starve_c_pirate(const schemes::Scheme& scheme) {
  PirateStrategy p;
  p.name = "starve_c";
  p.split = [](const deoraclizer::DeoraclizedProgram& program, Rng&) {
    PirateShare b;
    b.program = program;
    PirateShare c;  // nothing
    return std::make_pair(std::move(b), std::move(c));
  };
  p.eval_b = [&scheme](const PirateShare& share, const Bits& x, Rng& rng) {
    return eval_program_share(scheme, share, x, rng);
  };
  int output_bits = scheme.info().output_bits;
  p.eval_c = [output_bits](const PirateShare&, const Bits&, Rng& rng) {
    return rng.bits(output_bits);
  };
  return p;
}

PirateStrategy split_qubits_pirate(const schemes::Scheme& scheme) {
  const auto* conj = dynamic_cast<const schemes::ConjugateScheme*>(&scheme);
  if (conj == nullptr) {
    throw std::invalid_argument(
        "split_qubits pirate: requires the conjugate scheme");
  }
  auto params = conj->params();
  if (params.key_qubits < 2) {
    throw std::invalid_argument(
        "split_qubits pirate: needs at least two key qubits");
  }
  int half = params.key_qubits / 2;

  PirateStrategy p;
  p.name = "split_qubits";
  p.split = [params, half](const deoraclizer::DeoraclizedProgram& program,
                           Rng&) {
    const auto& quantum = *program.state.quantum;
    std::vector<int> front, back;
    for (int j = 0; j < half; ++j) front.push_back(j);
    for (int j = half; j < params.key_qubits + params.canary_qubits; ++j) {
      back.push_back(j);
    }
    PirateShare b;
    b.qubits = quantum.factor_register(front);
    b.fields = program.state.fields;
    b.tables = program.state.tables;
    b.program = program;  // database and tape are classical, both copy them
    b.program->state.quantum.reset();
    PirateShare c;
    c.qubits = quantum.factor_register(back);
    c.fields = program.state.fields;
    c.tables = program.state.tables;
    c.program = program;
    c.program->state.quantum.reset();
    return std::make_pair(std::move(b), std::move(c));
  };

  // Decode the held key qubits in their known bases, guess the rest, and
  // emulate the evaluation against the share's (database, tape).
  auto make_eval = [params, half, conj](bool is_front) {
    return [params, half, conj, is_front](const PirateShare& share,
                                          const Bits& x, Rng& rng) {
      const Bits& theta = share.fields.at("theta");
      int held_lo = is_front ? 0 : half;
      int held_hi = is_front ? half : params.key_qubits;
      qsim::PureState qubits = *share.qubits;
      Eigen::Matrix2cd h;
      double s = 1.0 / std::sqrt(2.0);
      h << s, s, s, -s;
      for (int j = held_lo; j < held_hi; ++j) {
        if ((theta.value() >> (params.key_qubits - 1 - j)) & 1) {
          qubits = qubits.apply_1q(h, j - held_lo);
        }
      }
      std::vector<int> held;
      for (int j = held_lo; j < held_hi; ++j) held.push_back(j - held_lo);
      auto probs = qubits.register_distribution(held);
      double u = rng.uniform();
      std::uint64_t decoded = 0;
      double acc = 0.0;
      for (std::uint64_t v = 0; v < probs.size(); ++v) {
        acc += probs[v];
        if (u < acc) {
          decoded = v;
          break;
        }
      }
      // Assemble the full key: held bits in place, missing bits guessed.
      int missing = params.key_qubits - (held_hi - held_lo);
      std::uint64_t guess = rng.below(1ULL << missing);
      std::uint64_t key;
      if (is_front) {
        key = (decoded << missing) | guess;
      } else {
        key = (guess << (held_hi - held_lo)) | decoded;
      }
      Bits point = Bits::concat(
          Bits::concat(Bits(key, params.key_qubits), Bits(0, 1)), x);
      oracle::ReplayOracle replay(&share.program->database,
                                  &share.program->tape);
      Bits answer = replay.answer(point);
      return share.tables.at("mask")[x.value()] ^ answer;
    };
  };
  p.eval_b = make_eval(true);
  p.eval_c = make_eval(false);
  return p;
}

ExperimentReport run_piracy_plain(const schemes::Scheme& scheme,
                                  const deoraclizer::DeoraclizerConfig& config,
                                  const PirateStrategy& pirate, long trials,
                                  std::uint64_t seed) {
  auto results = map_trials<char>(trials, [&](long i) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    Bits d_f = scheme.sample_function(rng);
    auto out = deoraclizer::compile(scheme, d_f, config, rng);
    auto [share_b, share_c] = pirate.split(out.program, rng);
    Bits x_b = scheme.sample_challenge(d_f, rng);
    Bits x_c = scheme.sample_challenge(d_f, rng);
    Rng rng_b = rng.fork(0xB0Bu);
    Rng rng_c = rng.fork(0xC0Cu);
    Bits y_b = pirate.eval_b(share_b, x_b, rng_b);
    Bits y_c = pirate.eval_c(share_c, x_c, rng_c);
    return static_cast<char>(y_b == scheme.truth(d_f, x_b) &&
                             y_c == scheme.truth(d_f, x_c));
  });
  long successes = 0;
  for (char c : results) successes += c;
  return report_from_successes(
      "piracy_plain", successes, trials, seed,
      {{"scheme", scheme.info().name},
       {"pirate", pirate.name},
       {"epsilon", config.epsilon}});
}

CaromPirateStrategy lift_pirate(const PirateStrategy& plain,
                                const deoraclizer::DeoraclizerConfig& config) {
  CaromPirateStrategy lifted;
  lifted.name = plain.name + "+lifted";
  lifted.split = [&plain, config](schemes::ProtectedState state,
                                  oracle::OracleHandle& live,
                                  const schemes::Scheme& scheme, Rng& rng) {
    const auto& info = scheme.info();
    int t = config.stop_bound_for(info);
    int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
    // Query use is bounded by S * N <= (T-1) * N.
    oracle::CountingOracle budget(live, s * info.eval_query_bound,
                                  "lifted pirate");
    oracle::OracleDatabase d_eval(info.l_in, info.l_out);
    for (int i = 1; i <= s; ++i) {
      Bits x = scheme.sample_input(rng);
      std::size_t mark = budget.transcript().size();
      oracle::CountingOracle eval_view(budget, info.eval_query_bound, "Eval");
      auto [next, y] = scheme.eval(std::move(state), x, eval_view, rng);
      state = std::move(next);
      for (std::size_t k = mark; k < budget.transcript().size(); ++k) {
        d_eval.insert(budget.transcript()[k].input,
                      budget.transcript()[k].output);
      }
    }
    oracle::AnswerTape tape =
        oracle::AnswerTape::sample(info.eval_query_bound, info.l_out, rng);
    deoraclizer::DeoraclizedProgram program{std::move(state), std::move(d_eval),
                                            std::move(tape), s};
    return plain.split(program, rng);
  };
  lifted.eval_b = plain.eval_b;
  lifted.eval_c = plain.eval_c;
  return lifted;
}

ExperimentReport run_piracy_carom(const schemes::Scheme& scheme,
                                  const CaromPirateStrategy& pirate,
                                  long trials, std::uint64_t seed) {
  const auto& info = scheme.info();
  auto results = map_trials<char>(trials, [&](long i) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    Bits d_f = scheme.sample_function(rng);
    oracle::OnTheFlyOracle session(info.l_in, info.l_out,
                                   rng.fork(0x6F72616Cu));
    oracle::CountingOracle cp_view(session, info.cp_query_bound, "CP");
    auto state = scheme.cp(d_f, cp_view, rng);
    auto [share_b, share_c] = pirate.split(std::move(state), session, scheme, rng);
    Bits x_b = scheme.sample_challenge(d_f, rng);
    Bits x_c = scheme.sample_challenge(d_f, rng);
    Rng rng_b = rng.fork(0xB0Bu);
    Rng rng_c = rng.fork(0xC0Cu);
    Bits y_b = pirate.eval_b(share_b, x_b, rng_b);
    Bits y_c = pirate.eval_c(share_c, x_c, rng_c);
    return static_cast<char>(y_b == scheme.truth(d_f, x_b) &&
                             y_c == scheme.truth(d_f, x_c));
  });
  long successes = 0;
  for (char c : results) successes += c;
  return report_from_successes("piracy_carom", successes, trials, seed,
                               {{"scheme", info.name}, {"pirate", pirate.name}});
}

}  // namespace caromlab::harness
