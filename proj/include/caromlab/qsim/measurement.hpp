// General measurements (M_i) with sum M_i^dag M_i = I, outcome sampling, and
// post-measurement states.

#pragma once

#include <optional>
#include <vector>

#include "caromlab/qsim/state.hpp"
#include "caromlab/rng.hpp"

namespace caromlab::qsim {

inline constexpr double kDegenerateProb = 1e-12;

class Measurement {
 public:
  // Validates equal dimensions and completeness (operator norm of the
  // deviation of sum M_i^dag M_i from identity at most 1e-9).
  static Measurement make(std::vector<Matrix> operators);

  static Measurement computational_basis(int qubits);
  static Measurement two_outcome(Matrix m0, Matrix m1);

  int outcomes() const { return static_cast<int>(operators_.size()); }
  Eigen::Index dim() const { return operators_.front().rows(); }
  const Matrix& op(int i) const { return operators_.at(static_cast<std::size_t>(i)); }
  const std::vector<Matrix>& operators() const { return operators_; }

  bool is_projective(double tol = kStateTol) const;

 private:
  explicit Measurement(std::vector<Matrix> ops) : operators_(std::move(ops)) {}
  std::vector<Matrix> operators_;
};

struct MeasurementOutcome {
  int outcome_index = 0;
  double probability = 0.0;
  // Absent iff the outcome probability is below 1e-12 (degenerate).
  std::optional<DensityOperator> post_state;
  bool degenerate = false;
};

// Deterministic sibling of measure(): the full outcome distribution.
std::vector<double> outcome_distribution(const DensityOperator& state,
                                         const Measurement& m);

// Post-measurement data for a fixed outcome (no sampling).
MeasurementOutcome measure_outcome(const DensityOperator& state,
                                   const Measurement& m, int outcome);

// Samples an outcome with probability Tr(M_i rho M_i^dag).
MeasurementOutcome measure(const DensityOperator& state, const Measurement& m,
                           Rng& rng);

// Post-measurement state when the outcome is not revealed: sum M_i rho M_i^dag.
DensityOperator unrevealed_mixture(const DensityOperator& state,
                                   const Measurement& m);

}  // namespace caromlab::qsim
