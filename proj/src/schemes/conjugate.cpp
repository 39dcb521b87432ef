#include "caromlab/schemes/conjugate.hpp"

#include <cmath>

#include "caromlab/oracle/query.hpp"

namespace caromlab::schemes {

namespace {

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

}  // namespace

ConjugateScheme::ConjugateScheme(const ConjugateParams& p) : p_(p) {
  if (p.key_qubits < 1 || p.canary_qubits < 1) {
    throw std::invalid_argument("ConjugateScheme: needs key and canary qubits");
  }
  if (p.eps_dist < 0.0 || p.eps_dist > 1.0) {
    throw std::invalid_argument("ConjugateScheme: eps_dist in [0,1]");
  }
  int workspace =
      p.key_qubits + p.canary_qubits + p.input_bits + p.output_bits;
  if (workspace > qsim::kMaxPureQubits) {
    throw std::invalid_argument("ConjugateScheme: workspace exceeds qubit cap");
  }
  info_.name = "conjugate";
  info_.lambda = p.lambda;
  info_.cp_query_bound = 1 << p.input_bits;
  info_.eval_query_bound = 1;
  info_.l_in = p.key_qubits + 1 + p.input_bits;
  info_.l_out = p.output_bits;
  info_.input_bits = p.input_bits;
  info_.output_bits = p.output_bits;
  info_.classical = false;
  info_.params = {{"lambda", p.lambda},
                  {"key_qubits", p.key_qubits},
                  {"canary_qubits", p.canary_qubits},
                  {"input_bits", p.input_bits},
                  {"output_bits", p.output_bits},
                  {"eps_dist", p.eps_dist}};
}

Bits ConjugateScheme::sample_function(Rng& rng) const {
  return rng.bits(p_.key_qubits);
}

Bits ConjugateScheme::truth(const Bits& d_f, const Bits& x) const {
  std::uint64_t mixed = mix64(d_f.value() ^ 0x94D049BB133111EBULL, x.value());
  return Bits(mixed & ((1ULL << p_.output_bits) - 1), p_.output_bits);
}

Bits ConjugateScheme::oracle_point(const Bits& key, int canary_bit,
                                   const Bits& x) const {
  return Bits::concat(Bits::concat(key, Bits(canary_bit ? 1 : 0, 1)), x);
}

qsim::PureState ConjugateScheme::program_state(const Bits& key,
                                               const Bits& theta) const {
  qsim::PureState state =
      qsim::PureState::basis(p_.key_qubits, key.value());
  for (int j = 0; j < p_.key_qubits; ++j) {
    if ((theta.value() >> (p_.key_qubits - 1 - j)) & 1) {
      state = state.apply_1q(hadamard(), j);
    }
  }
  qsim::Vector canary(2);
  canary << qsim::Complex(std::sqrt(1.0 - p_.eps_dist), 0.0),
      qsim::Complex(std::sqrt(p_.eps_dist), 0.0);
  qsim::PureState canary_state = qsim::PureState::from_amplitudes(canary);
  for (int c = 0; c < p_.canary_qubits; ++c) {
    state = state.tensor(canary_state);
  }
  return state;
}

ProtectedState ConjugateScheme::cp(const Bits& d_f, oracle::OracleHandle& o,
                                   Rng& rng) const {
  Bits theta = rng.bits(p_.key_qubits);
  std::vector<Bits> mask;
  std::uint64_t domain = 1ULL << p_.input_bits;
  mask.reserve(domain);
  for (std::uint64_t x = 0; x < domain; ++x) {
    Bits xb(x, p_.input_bits);
    mask.push_back(truth(d_f, xb) ^ o.answer(oracle_point(d_f, 0, xb)));
  }
  ProtectedState state;
  state.quantum = program_state(d_f, theta);
  state.fields.emplace("theta", theta);
  state.tables.emplace("mask", std::move(mask));
  state.counters.emplace("counter", 0);
  return state;
}

std::pair<ProtectedState, Bits> ConjugateScheme::eval(ProtectedState state,
                                                      const Bits& x,
                                                      oracle::OracleHandle& o,
                                                      Rng& rng) const {
  if (x.width() != p_.input_bits) {
    throw std::invalid_argument("ConjugateScheme::eval: input width mismatch");
  }
  if (!state.quantum) {
    throw std::invalid_argument("ConjugateScheme::eval: missing quantum part");
  }
  const Bits& theta = state.fields.at("theta");
  std::uint64_t counter = state.counters.at("counter");
  int canary = static_cast<int>(
      counter % static_cast<std::uint64_t>(p_.canary_qubits));

  // Workspace: [key canaries | x | answer].
  qsim::PureState work =
      state.quantum->append_basis(x).append_basis(Bits(0, p_.output_bits));
  for (int j = 0; j < p_.key_qubits; ++j) {
    if ((theta.value() >> (p_.key_qubits - 1 - j)) & 1) {
      work = work.apply_1q(hadamard(), j);
    }
  }

  std::vector<int> query_register;
  for (int j = 0; j < p_.key_qubits; ++j) query_register.push_back(j);
  query_register.push_back(p_.key_qubits + canary);
  int x_base = p_.key_qubits + p_.canary_qubits;
  for (int j = 0; j < p_.input_bits; ++j) query_register.push_back(x_base + j);
  std::vector<int> answer_register;
  for (int j = 0; j < p_.output_bits; ++j) {
    answer_register.push_back(x_base + p_.input_bits + j);
  }

  auto result =
      oracle::classical_query(work, query_register, answer_register, o, rng);
  Bits y = state.tables.at("mask")[x.value()] ^ result.answer;

  qsim::PureState post = result.state;
  for (int j = 0; j < p_.key_qubits; ++j) {
    if ((theta.value() >> (p_.key_qubits - 1 - j)) & 1) {
      post = post.apply_1q(hadamard(), j);
    }
  }
  std::vector<int> scratch;
  for (int j = 0; j < p_.input_bits + p_.output_bits; ++j) {
    scratch.push_back(x_base + j);
  }
  std::uint64_t scratch_value =
      (x.value() << p_.output_bits) | result.answer.value();
  state.quantum = post.drop_register(scratch, scratch_value);
  state.counters.at("counter") = counter + 1;
  return {std::move(state), y};
}

}  // namespace caromlab::schemes
