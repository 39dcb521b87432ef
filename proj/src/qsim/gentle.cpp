#include "caromlab/qsim/gentle.hpp"

#include <stdexcept>

namespace caromlab::qsim {

Matrix measurement_dilation_unitary(const Measurement& m) {
  if (m.outcomes() != 2) {
    throw std::invalid_argument("gentle recovery requires a binary measurement");
  }
  Eigen::Index d = m.dim();
  Matrix v(2 * d, d);
  v.topRows(d) = m.op(0);
  v.bottomRows(d) = m.op(1);
  // Complete the isometry's columns to a unitary: QR supplies an orthonormal
  // basis whose trailing columns span the complement of col(V).
  Eigen::HouseholderQR<Matrix> qr(v);
  Matrix q = qr.householderQ();
  Matrix u(2 * d, 2 * d);
  u.leftCols(d) = v;
  u.rightCols(d) = q.rightCols(d);
  return u;
}

DensityOperator gentle_recover(const DensityOperator& post_state,
                               const Measurement& m, int observed) {
  if (m.outcomes() != 2) {
    throw std::invalid_argument("gentle_recover: measurement must be binary");
  }
  if (observed != 0 && observed != 1) {
    throw std::out_of_range("gentle_recover: outcome must be 0 or 1");
  }
  if (post_state.dim() != m.dim()) {
    throw std::invalid_argument("gentle_recover: dimension mismatch");
  }
  Eigen::Index d = m.dim();
  Matrix u = measurement_dilation_unitary(m);
  // Joint state (ancilla = observed outcome) x post_state, then uncompute.
  Matrix joint = Matrix::Zero(2 * d, 2 * d);
  Eigen::Index off = observed == 0 ? 0 : d;
  joint.block(off, off, d, d) = post_state.matrix();
  Matrix recovered_joint = u.adjoint() * joint * u;
  // Trace out the ancilla.
  Matrix out = recovered_joint.block(0, 0, d, d) +
               recovered_joint.block(d, d, d, d);
  return DensityOperator::from_matrix(std::move(out));
}

ClassicalOutputResult wrap_classical_output(const ClassicalAlgorithm& alg,
                                            const DensityOperator& rho,
                                            const Bits& x, Rng& rng) {
  LabeledMeasurement lm = alg.measurement_for(x);
  if (static_cast<int>(lm.labels.size()) != lm.measurement.outcomes()) {
    throw std::invalid_argument("wrap_classical_output: label count mismatch");
  }
  if (!lm.measurement.is_projective()) {
    throw std::invalid_argument(
        "wrap_classical_output: output measurement must be projective");
  }
  Bits target = alg.expected(x);
  Eigen::Index d = lm.measurement.dim();

  // Coarse-grained check "output == f(x)?" as a projective binary measurement.
  Matrix p_correct = Matrix::Zero(d, d);
  for (int i = 0; i < lm.measurement.outcomes(); ++i) {
    if (lm.labels[static_cast<std::size_t>(i)] == target) {
      p_correct += lm.measurement.op(i);
    }
  }
  Measurement check = Measurement::two_outcome(
      p_correct, Matrix::Identity(d, d) - p_correct);

  MeasurementOutcome coarse = measure(rho, check, rng);
  ClassicalOutputResult result;
  if (coarse.outcome_index == 0) {
    // Check passed: the output is f(x) and the state is gently recovered.
    result.output = target;
    result.check_passed = true;
    result.check_probability = coarse.probability;
    result.residual = coarse.degenerate
                          ? rho
                          : gentle_recover(*coarse.post_state, check, 0);
    return result;
  }
  // Check failed: finish the fine-grained measurement on the collapsed
  // branch; projectivity makes the joint output distribution identical to
  // measuring the fine measurement directly.
  result.check_passed = false;
  result.check_probability = 1.0 - coarse.probability;
  if (coarse.degenerate) {
    throw std::domain_error("wrap_classical_output: degenerate failure branch");
  }
  MeasurementOutcome fine = measure(*coarse.post_state, lm.measurement, rng);
  result.output = lm.labels[static_cast<std::size_t>(fine.outcome_index)];
  result.residual = fine.degenerate ? *coarse.post_state : *fine.post_state;
  return result;
}

}  // namespace caromlab::qsim
