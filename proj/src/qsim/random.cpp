#include "caromlab/qsim/random.hpp"

namespace caromlab::qsim {

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return g;
}

// Hermitian square root via eigendecomposition, eigenvalues clamped to [0,1].
Matrix psd_sqrt(const Matrix& e) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(e);
  Eigen::VectorXd vals = solver.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < 0.0) vals(i) = 0.0;
    if (vals(i) > 1.0) vals(i) = 1.0;
  }
  return solver.eigenvectors() * vals.cwiseSqrt().asDiagonal() *
         solver.eigenvectors().adjoint();
}

// Random POVM element 0 <= E <= I with eigenvalues uniform in [0,1].
Matrix random_povm_element(Eigen::Index dim, Rng& rng) {
  Matrix u = random_unitary(dim, rng);
  Eigen::VectorXd vals(dim);
  for (Eigen::Index i = 0; i < dim; ++i) vals(i) = rng.uniform();
  return u * vals.asDiagonal() * u.adjoint();
}

Measurement from_povm_element(const Matrix& e) {
  Eigen::Index d = e.rows();
  return Measurement::two_outcome(psd_sqrt(e),
                                  psd_sqrt(Matrix::Identity(d, d) - e));
}

}  // namespace

PureState random_pure(int qubits, Rng& rng) {
  Eigen::Index d = Eigen::Index{1} << qubits;
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    v(i) = Complex(rng.gaussian(), rng.gaussian());
  }
  v /= v.norm();
  return PureState::from_amplitudes(std::move(v));
}

DensityOperator random_density(int qubits, Rng& rng) {
  Eigen::Index d = Eigen::Index{1} << qubits;
  Matrix g = ginibre(d, d, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  // Symmetrize away round-off before validation.
  m = (m + m.adjoint()) / 2.0;
  return DensityOperator::from_matrix(std::move(m));
}

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

Measurement random_two_outcome(int qubits, Rng& rng) {
  Eigen::Index d = Eigen::Index{1} << qubits;
  return from_povm_element(random_povm_element(d, rng));
}

Measurement random_near_certain(int qubits, double eps, Rng& rng) {
  Eigen::Index d = Eigen::Index{1} << qubits;
  Matrix e = (1.0 - eps) * Matrix::Identity(d, d) +
             eps * random_povm_element(d, rng);
  return from_povm_element(e);
}

Measurement random_projective_pair(int qubits, int rank, Rng& rng) {
  Eigen::Index d = Eigen::Index{1} << qubits;
  if (rank < 0 || rank > d) {
    throw std::invalid_argument("random_projective_pair: bad rank");
  }
  Matrix u = random_unitary(d, rng);
  Matrix p = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < rank; ++i) {
    p += u.col(i) * u.col(i).adjoint();
  }
  p = (p + p.adjoint()) / 2.0;
  return Measurement::two_outcome(p, Matrix::Identity(d, d) - p);
}

}  // namespace caromlab::qsim
