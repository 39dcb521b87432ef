// Query semantics for quantum callers of a classical-accessible oracle: the
// query register is measured in the computational basis, then the oracle's
// answer is XORed into the answer register.

#pragma once

#include "caromlab/oracle/oracle.hpp"
#include "caromlab/qsim/state.hpp"

namespace caromlab::oracle {

struct ClassicalQueryResult {
  qsim::PureState state;
  Bits queried;  // the collapsed query-register value
  Bits answer;   // the oracle's answer for it
};

ClassicalQueryResult classical_query(const qsim::PureState& state,
                                     const std::vector<int>& query_register,
                                     const std::vector<int>& answer_register,
                                     OracleHandle& oracle, Rng& rng);

}  // namespace caromlab::oracle
