// Gentle (almost-as-good-as-new) recovery for near-certain two-outcome
// measurements, and the classical-output wrapper built on top of it.
//
// The recovery map depends only on the measurement and the observed outcome,
// never on the pre-measurement state: the measurement is dilated to a unitary
// U on system x ancilla with U(|psi>|0>) = M_0|psi>|0> + M_1|psi>|1>, the
// observed outcome fixes the ancilla, and U^dag uncomputes. When the observed
// outcome had pre-measurement probability >= 1 - eps, the recovered state is
// within sqrt(eps) of the original in trace distance.

#pragma once

#include <functional>

#include "caromlab/bits.hpp"
#include "caromlab/qsim/measurement.hpp"

namespace caromlab::qsim {

// Unitary on (ancilla x system), ancilla as the most significant qubit, whose
// first block-column implements the two-outcome measurement isometry
// [M_0; M_1].
Matrix measurement_dilation_unitary(const Measurement& two_outcome);

// Applies the uncomputation map to the post-measurement state of `observed`.
DensityOperator gentle_recover(const DensityOperator& post_state,
                               const Measurement& two_outcome, int observed);

// An algorithm with classical output, in deferred-measurement form: for each
// input x it is a projective measurement whose outcomes carry output labels,
// together with the reference output f(x) it is supposed to produce.
struct LabeledMeasurement {
  Measurement measurement;
  std::vector<Bits> labels;  // one per outcome
};

struct ClassicalAlgorithm {
  std::function<LabeledMeasurement(const Bits& x)> measurement_for;
  std::function<Bits(const Bits& x)> expected;  // f(x)
};

struct ClassicalOutputResult {
  Bits output;
  DensityOperator residual;
  bool check_passed = false;   // the y == f(x) branch was taken
  double check_probability = 0.0;  // pre-measurement probability of that branch
};

// Runs `alg` on (rho, x) so that the output is distributed exactly as the
// unwrapped algorithm's, while the residual state on the check-passed branch
// is gently recovered (trace distance at most sqrt(1 - check_probability)).
ClassicalOutputResult wrap_classical_output(const ClassicalAlgorithm& alg,
                                            const DensityOperator& rho,
                                            const Bits& x, Rng& rng);

}  // namespace caromlab::qsim
