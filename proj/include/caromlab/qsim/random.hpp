// Seeded random states, unitaries, and measurements for property tests and
// the gentle-measurement experiments.

#pragma once

#include "caromlab/qsim/measurement.hpp"
#include "caromlab/rng.hpp"

namespace caromlab::qsim {

PureState random_pure(int qubits, Rng& rng);

// Ginibre construction: G G^dag / Tr(G G^dag).
DensityOperator random_density(int qubits, Rng& rng);

// Haar-like via QR of a Ginibre matrix with phase fixing.
Matrix random_unitary(Eigen::Index dim, Rng& rng);

// Generic two-outcome measurement from a random POVM element E in [0, I]:
// M_0 = sqrt(E), M_1 = sqrt(I - E).
Measurement random_two_outcome(int qubits, Rng& rng);

// Two-outcome measurement whose outcome-0 probability on `state` is at least
// 1 - eps: the POVM element is (1-eps) I + eps E for a random E in [0, I].
Measurement random_near_certain(int qubits, double eps, Rng& rng);

// Projective binary measurement (P, I-P) with P a random rank-`rank`
// projector.
Measurement random_projective_pair(int qubits, int rank, Rng& rng);

}  // namespace caromlab::qsim
