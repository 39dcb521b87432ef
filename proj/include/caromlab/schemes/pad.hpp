// Classical exact scheme. CP derives a one-time pad from M oracle points
// (key || i) and stores the masked truth table; Eval unmasks f(x) with one
// input-dependent query at (key || h(x)), h(x) = x mod M. Every Eval query
// lands in D_CP, so it exercises the D_CP/D_Eval overlap dynamics.

#pragma once

#include "caromlab/schemes/scheme.hpp"

namespace caromlab::schemes {

struct PadParams {
  int lambda = 16;
  int pad_size = 10;  // M
  int key_bits = 16;
  int input_bits = 6;
  int output_bits = 8;
};

class PadScheme : public Scheme {
 public:
  explicit PadScheme(const PadParams& p);

  Bits sample_function(Rng& rng) const override;
  Bits truth(const Bits& d_f, const Bits& x) const override;
  ProtectedState cp(const Bits& d_f, oracle::OracleHandle& o,
                    Rng& rng) const override;
  std::pair<ProtectedState, Bits> eval(ProtectedState state, const Bits& x,
                                       oracle::OracleHandle& o,
                                       Rng& rng) const override;

 private:
  Bits pad_point(const Bits& key, std::uint64_t index) const;
  PadParams p_;
  int idx_bits_;
};

}  // namespace caromlab::schemes
