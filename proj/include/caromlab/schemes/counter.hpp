// Adversarial classical scheme. CP queries M points (key || 1..M); Eval's
// i-th invocation queries the next `queries_per_eval` points after its
// internal counter and increments it, so the queried points drift with use.
// Any deterministic number c of recorded test executions with c * q < M
// leaves the next point in D_CP \ D_Eval; random stopping is required.

#pragma once

#include "caromlab/schemes/scheme.hpp"

namespace caromlab::schemes {

struct CounterParams {
  int lambda = 16;
  int cp_points = 10;  // M
  int key_bits = 16;
  int input_bits = 6;
  int output_bits = 8;
  int queries_per_eval = 1;  // N
};

class CounterScheme : public Scheme {
 public:
  explicit CounterScheme(const CounterParams& p);

  Bits sample_function(Rng& rng) const override;
  Bits truth(const Bits& d_f, const Bits& x) const override;
  ProtectedState cp(const Bits& d_f, oracle::OracleHandle& o,
                    Rng& rng) const override;
  std::pair<ProtectedState, Bits> eval(ProtectedState state, const Bits& x,
                                       oracle::OracleHandle& o,
                                       Rng& rng) const override;

 private:
  Bits point(const Bits& key, std::uint64_t index) const;
  CounterParams p_;
};

}  // namespace caromlab::schemes
