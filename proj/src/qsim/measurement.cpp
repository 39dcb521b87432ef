#include "caromlab/qsim/measurement.hpp"

#include <stdexcept>

namespace caromlab::qsim {

Measurement Measurement::make(std::vector<Matrix> operators) {
  if (operators.empty()) {
    throw std::invalid_argument("Measurement: needs at least one operator");
  }
  Eigen::Index d = operators.front().rows();
  for (const auto& m : operators) {
    if (m.rows() != d || m.cols() != d) {
      throw std::invalid_argument("Measurement: operators must share dimension");
    }
  }
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& m : operators) sum += m.adjoint() * m;
  sum -= Matrix::Identity(d, d);
  if (operator_norm(sum) > kStateTol) {
    throw std::invalid_argument("Measurement: completeness relation violated");
  }
  return Measurement(std::move(operators));
}

Measurement Measurement::computational_basis(int qubits) {
  Eigen::Index d = Eigen::Index{1} << qubits;
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    Matrix p = Matrix::Zero(d, d);
    p(i, i) = Complex(1.0, 0.0);
    ops.push_back(std::move(p));
  }
  return Measurement(std::move(ops));
}

Measurement Measurement::two_outcome(Matrix m0, Matrix m1) {
  std::vector<Matrix> ops;
  ops.push_back(std::move(m0));
  ops.push_back(std::move(m1));
  return make(std::move(ops));
}

bool Measurement::is_projective(double tol) const {
  for (const auto& m : operators_) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if ((m * m - m).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

std::vector<double> outcome_distribution(const DensityOperator& state,
                                         const Measurement& m) {
  if (state.dim() != m.dim()) {
    throw std::invalid_argument("outcome_distribution: dimension mismatch");
  }
  std::vector<double> probs(static_cast<std::size_t>(m.outcomes()), 0.0);
  for (int i = 0; i < m.outcomes(); ++i) {
    probs[static_cast<std::size_t>(i)] =
        (m.op(i) * state.matrix() * m.op(i).adjoint()).trace().real();
  }
  return probs;
}

MeasurementOutcome measure_outcome(const DensityOperator& state,
                                   const Measurement& m, int outcome) {
  if (state.dim() != m.dim()) {
    throw std::invalid_argument("measure_outcome: dimension mismatch");
  }
  if (outcome < 0 || outcome >= m.outcomes()) {
    throw std::out_of_range("measure_outcome: outcome index out of range");
  }
  Matrix post = m.op(outcome) * state.matrix() * m.op(outcome).adjoint();
  double p = post.trace().real();
  MeasurementOutcome result;
  result.outcome_index = outcome;
  result.probability = p < 0.0 ? 0.0 : p;
  if (p < kDegenerateProb) {
    result.degenerate = true;
    return result;
  }
  result.post_state = DensityOperator::from_matrix(post / p);
  return result;
}

MeasurementOutcome measure(const DensityOperator& state, const Measurement& m,
                           Rng& rng) {
  auto probs = outcome_distribution(state, m);
  double u = rng.uniform();
  double acc = 0.0;
  int chosen = m.outcomes() - 1;
  for (int i = 0; i < m.outcomes(); ++i) {
    acc += probs[static_cast<std::size_t>(i)];
    if (u < acc) {
      chosen = i;
      break;
    }
  }
  return measure_outcome(state, m, chosen);
}

DensityOperator unrevealed_mixture(const DensityOperator& state,
                                   const Measurement& m) {
  if (state.dim() != m.dim()) {
    throw std::invalid_argument("unrevealed_mixture: dimension mismatch");
  }
  Matrix out = Matrix::Zero(state.dim(), state.dim());
  for (int i = 0; i < m.outcomes(); ++i) {
    out += m.op(i) * state.matrix() * m.op(i).adjoint();
  }
  return DensityOperator::from_matrix(std::move(out));
}

}  // namespace caromlab::qsim
