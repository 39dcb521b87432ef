#include "caromlab/harness/learnability.hpp"

#include "caromlab/parallel.hpp"

namespace caromlab::harness {

Learner exhaustive_learner() {
  Learner l;
  l.name = "exhaustive";
  l.run = [](oracle::OracleHandle& f, int input_bits, Rng&) -> Hypothesis {
    auto table = std::make_shared<std::vector<Bits>>();
    std::uint64_t domain = 1ULL << input_bits;
    table->reserve(domain);
    for (std::uint64_t x = 0; x < domain; ++x) {
      table->push_back(f.answer(Bits(x, input_bits)));
    }
    return [table](const Bits& x) { return (*table)[x.value()]; };
  };
  return l;
}

Learner zero_query_guess_learner() {
  Learner l;
  l.name = "zero_query_guess";
  l.run = [](oracle::OracleHandle&, int input_bits, Rng& rng) -> Hypothesis {
    Bits guess = rng.bits(input_bits);
    return [guess](const Bits& x) { return Bits(x == guess ? 1 : 0, 1); };
  };
  return l;
}

Learner budgeted_prefix_learner(long budget) {
  Learner l;
  l.name = "prefix_b" + std::to_string(budget);
  l.run = [budget](oracle::OracleHandle& f, int input_bits,
                   Rng& rng) -> Hypothesis {
    std::uint64_t domain = 1ULL << input_bits;
    std::uint64_t queried = std::min<std::uint64_t>(
        domain, static_cast<std::uint64_t>(budget));
    std::optional<Bits> found;
    for (std::uint64_t x = 0; x < queried; ++x) {
      Bits xb(x, input_bits);
      if (f.answer(xb).value() == 1) {
        found = xb;
        break;
      }
    }
    Bits point = found ? *found
                       : Bits(queried >= domain
                                  ? 0
                                  : queried + rng.below(domain - queried),
                              input_bits);
    bool trust = found.has_value() || queried < domain;
    return [point, trust](const Bits& x) {
      if (!trust) return Bits(0, 1);
      return Bits(x == point ? 1 : 0, 1);
    };
  };
  return l;
}

ExperimentReport run_learnability(const PointFunctionClass& cls,
                                  const Learner& learner,
                                  const LearnerConfig& config, long trials,
                                  std::uint64_t seed) {
  if (cls.input_bits > kMaxLearnDomainBits) {
    throw std::invalid_argument(
        "run_learnability: domain too large to enumerate");
  }
  if (config.nu <= 0.0 || config.nu > 1.0) {
    throw std::invalid_argument("run_learnability: nu must be in (0,1]");
  }
  auto results = map_trials<char>(trials, [&](long i) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    Bits a = cls.sample(rng);
    oracle::FixedOracle f(cls.input_bits, 1, [&cls, a](const Bits& x) {
      return cls.truth(a, x);
    });
    oracle::CountingOracle budget(
        f, static_cast<int>(config.query_budget), "learner");
    Hypothesis h = learner.run(budget, cls.input_bits, rng);
    std::uint64_t domain = 1ULL << cls.input_bits;
    for (std::uint64_t x = 0; x < domain; ++x) {
      Bits xb(x, cls.input_bits);
      if (h(xb) != cls.truth(a, xb)) return static_cast<char>(0);
    }
    return static_cast<char>(1);
  });
  long successes = 0;
  for (char c : results) successes += c;
  return report_from_successes("learnability", successes, trials, seed,
                               {{"learner", learner.name},
                                {"nu", config.nu},
                                {"query_budget", config.query_budget},
                                {"input_bits", cls.input_bits}});
}

}  // namespace caromlab::harness
