// Dense small-dimension quantum states. Pure states up to 12 qubits, density
// operators up to 6 qubits; both validate their invariants on construction.
//
// Qubit convention: qubit 0 is the most significant bit of the basis index,
// so |b_0 b_1 ... b_{n-1}> has index sum(b_q << (n-1-q)). Registers are
// ordered lists of distinct qubit indices; a register value assembles its
// bits in register order (first listed qubit is the value's MSB).

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "caromlab/bits.hpp"

namespace caromlab::qsim {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxPureQubits = 12;
inline constexpr int kMaxMixedQubits = 6;
inline constexpr double kStateTol = 1e-9;
inline constexpr double kEigenClamp = 1e-12;

class DensityOperator;

class PureState {
 public:
  static PureState basis(int qubits, std::uint64_t index, int cap = kMaxPureQubits);
  static PureState from_amplitudes(Vector amplitudes, int cap = kMaxPureQubits);

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }

  Complex inner(const PureState& other) const;

  // |psi><psi| (subject to the density-operator qubit cap).
  DensityOperator to_density() const;

  PureState apply_1q(const Eigen::Matrix2cd& u, int qubit) const;
  PureState tensor(const PureState& other) const;

  // Appends a classical register in a computational basis state.
  PureState append_basis(const Bits& value) const;

  // Probability of reading `value` on `reg` in the computational basis.
  std::vector<double> register_distribution(const std::vector<int>& reg) const;

  // Projects `reg` onto `value` and renormalizes; throws if the probability
  // is numerically zero.
  PureState collapse_register(const std::vector<int>& reg,
                              std::uint64_t value) const;

  // XORs `mask` into the register (a basis permutation).
  PureState xor_register(const std::vector<int>& reg, std::uint64_t mask) const;

  // Reads a register that must be in a definite basis state (within
  // tolerance); used for classical scratch registers.
  std::uint64_t read_basis_register(const std::vector<int>& reg) const;

  // Removes qubits that are in the definite basis state `expected` (in
  // register order), returning the state on the remaining qubits.
  PureState drop_register(const std::vector<int>& reg,
                          std::uint64_t expected) const;

  // Factors out the sub-state on `reg` when the state is a product across
  // the (reg, rest) cut; throws std::domain_error otherwise.
  PureState factor_register(const std::vector<int>& reg) const;

 private:
  PureState(int qubits, Vector amplitudes)
      : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}

  void check_register(const std::vector<int>& reg) const;
  std::uint64_t register_value(std::uint64_t index,
                               const std::vector<int>& reg) const;

  int qubits_ = 0;
  Vector amplitudes_;
};

class DensityOperator {
 public:
  static DensityOperator from_matrix(Matrix m, int cap = kMaxMixedQubits);
  static DensityOperator pure(const PureState& psi, int cap = kMaxMixedQubits);

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  DensityOperator(int qubits, Matrix m)
      : qubits_(qubits), matrix_(std::move(m)) {}

  int qubits_ = 0;
  Matrix matrix_;
};

// Normalized trace distance (1/2)Tr|rho - sigma|, computed from the
// eigenvalues of the Hermitian difference; eigenvalues below 1e-12 in
// magnitude are clamped to zero.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// Hermitian / PSD / trace checks shared with the Measurement validator.
double hermiticity_defect(const Matrix& m);
double min_eigenvalue(const Matrix& hermitian);
double operator_norm(const Matrix& hermitian);

}  // namespace caromlab::qsim
