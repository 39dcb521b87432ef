#include "caromlab/oracle/query.hpp"

#include <stdexcept>

namespace caromlab::oracle {

ClassicalQueryResult classical_query(const qsim::PureState& state,
                                     const std::vector<int>& query_register,
                                     const std::vector<int>& answer_register,
                                     OracleHandle& oracle, Rng& rng) {
  for (int q : query_register) {
    for (int a : answer_register) {
      if (q == a) {
        throw std::invalid_argument("classical_query: registers overlap");
      }
    }
  }
  if (static_cast<int>(query_register.size()) != oracle.l_in()) {
    throw std::invalid_argument("classical_query: query register width mismatch");
  }
  if (static_cast<int>(answer_register.size()) != oracle.l_out()) {
    throw std::invalid_argument("classical_query: answer register width mismatch");
  }

  // Measure the query register: outcome x with probability
  // p_x = sum_{y,z} |alpha_{x,y,z}|^2.
  auto probs = state.register_distribution(query_register);
  double u = rng.uniform();
  double acc = 0.0;
  std::uint64_t x_value = probs.size() - 1;
  for (std::uint64_t v = 0; v < probs.size(); ++v) {
    acc += probs[v];
    if (u < acc) {
      x_value = v;
      break;
    }
  }
  qsim::PureState collapsed = state.collapse_register(query_register, x_value);

  Bits x(x_value, static_cast<int>(query_register.size()));
  Bits y = oracle.answer(x);
  qsim::PureState answered = collapsed.xor_register(answer_register, y.value());
  return ClassicalQueryResult{std::move(answered), x, y};
}

}  // namespace caromlab::oracle
