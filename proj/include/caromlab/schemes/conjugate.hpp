// Quantum scheme. The program state carries the key in random conjugate
// bases plus a row of "canary" qubits, each prepared as
// sqrt(1-eps)|0> + sqrt(eps)|1>. Eval decodes the key and one canary through
// a single classical-accessible oracle query (the query register collapses
// inside the oracle call) at (key || canary_bit || x); a canary collapsing to
// 1 diverts the query off the pad and spoils that evaluation.
//
// Each evaluation consumes the next canary (counter mod canaries), so the
// per-evaluation disturbance is eps_dist, correctness is stationary across
// chained evaluations, and the program state drifts by about sqrt(eps) in
// trace distance per consumed canary.

#pragma once

#include "caromlab/schemes/scheme.hpp"

namespace caromlab::schemes {

struct ConjugateParams {
  int lambda = 16;
  int key_qubits = 2;
  int canary_qubits = 2;
  int input_bits = 2;
  int output_bits = 2;
  double eps_dist = 0.01;
};

class ConjugateScheme : public Scheme {
 public:
  explicit ConjugateScheme(const ConjugateParams& p);

  Bits sample_function(Rng& rng) const override;
  Bits truth(const Bits& d_f, const Bits& x) const override;
  ProtectedState cp(const Bits& d_f, oracle::OracleHandle& o,
                    Rng& rng) const override;
  std::pair<ProtectedState, Bits> eval(ProtectedState state, const Bits& x,
                                       oracle::OracleHandle& o,
                                       Rng& rng) const override;

  // The program state CP prepares for (key, theta); exposed for state-drift
  // experiments that need the exact reference state.
  qsim::PureState program_state(const Bits& key, const Bits& theta) const;

  const ConjugateParams& params() const { return p_; }

 private:
  Bits oracle_point(const Bits& key, int canary_bit, const Bits& x) const;
  ConjugateParams p_;
};

}  // namespace caromlab::schemes
