#include "caromlab/qsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace caromlab::qsim {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("state dimension must be positive");
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw std::invalid_argument("state dimension must be a power of two");
  }
  return n;
}

}  // namespace

PureState PureState::basis(int qubits, std::uint64_t index, int cap) {
  if (qubits < 0 || qubits > cap) {
    throw std::invalid_argument("PureState: qubit count exceeds cap");
  }
  Eigen::Index dim = Eigen::Index{1} << qubits;
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw std::out_of_range("PureState::basis: index out of range");
  }
  Vector amps = Vector::Zero(dim);
  amps(static_cast<Eigen::Index>(index)) = Complex(1.0, 0.0);
  return PureState(qubits, std::move(amps));
}

PureState PureState::from_amplitudes(Vector amplitudes, int cap) {
  int n = qubits_for_dim(amplitudes.size());
  if (n > cap) throw std::invalid_argument("PureState: qubit count exceeds cap");
  double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kStateTol) {
    throw std::invalid_argument("PureState: amplitudes not normalized");
  }
  return PureState(n, std::move(amplitudes));
}

Complex PureState::inner(const PureState& other) const {
  if (qubits_ != other.qubits_) {
    throw std::invalid_argument("PureState::inner: dimension mismatch");
  }
  return amplitudes_.dot(other.amplitudes_);
}

DensityOperator PureState::to_density() const {
  return DensityOperator::pure(*this);
}

PureState PureState::apply_1q(const Eigen::Matrix2cd& u, int qubit) const {
  if (qubit < 0 || qubit >= qubits_) {
    throw std::out_of_range("PureState::apply_1q: qubit out of range");
  }
  std::uint64_t bit = 1ULL << (qubits_ - 1 - qubit);
  Vector out = amplitudes_;
  std::uint64_t dim = static_cast<std::uint64_t>(amplitudes_.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    std::uint64_t j = i | bit;
    Complex a0 = amplitudes_(static_cast<Eigen::Index>(i));
    Complex a1 = amplitudes_(static_cast<Eigen::Index>(j));
    out(static_cast<Eigen::Index>(i)) = u(0, 0) * a0 + u(0, 1) * a1;
    out(static_cast<Eigen::Index>(j)) = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return PureState(qubits_, std::move(out));
}

PureState PureState::tensor(const PureState& other) const {
  int n = qubits_ + other.qubits_;
  if (n > kMaxPureQubits) {
    throw std::invalid_argument("PureState::tensor: qubit cap exceeded");
  }
  Eigen::Index d2 = other.amplitudes_.size();
  Vector out(amplitudes_.size() * d2);
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    out.segment(i * d2, d2) = amplitudes_(i) * other.amplitudes_;
  }
  return PureState(n, std::move(out));
}

PureState PureState::append_basis(const Bits& value) const {
  return tensor(PureState::basis(value.width(), value.value()));
}

void PureState::check_register(const std::vector<int>& reg) const {
  std::uint64_t seen = 0;
  for (int q : reg) {
    if (q < 0 || q >= qubits_) {
      throw std::out_of_range("register qubit out of range");
    }
    std::uint64_t bit = 1ULL << q;
    if (seen & bit) throw std::invalid_argument("register repeats a qubit");
    seen |= bit;
  }
}

std::uint64_t PureState::register_value(std::uint64_t index,
                                        const std::vector<int>& reg) const {
  std::uint64_t v = 0;
  for (int q : reg) {
    v = (v << 1) | ((index >> (qubits_ - 1 - q)) & 1);
  }
  return v;
}

std::vector<double> PureState::register_distribution(
    const std::vector<int>& reg) const {
  check_register(reg);
  std::vector<double> probs(1ULL << reg.size(), 0.0);
  std::uint64_t dim = static_cast<std::uint64_t>(amplitudes_.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    probs[register_value(i, reg)] +=
        std::norm(amplitudes_(static_cast<Eigen::Index>(i)));
  }
  return probs;
}

PureState PureState::collapse_register(const std::vector<int>& reg,
                                       std::uint64_t value) const {
  check_register(reg);
  Vector out = Vector::Zero(amplitudes_.size());
  double p = 0.0;
  std::uint64_t dim = static_cast<std::uint64_t>(amplitudes_.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (register_value(i, reg) == value) {
      out(static_cast<Eigen::Index>(i)) =
          amplitudes_(static_cast<Eigen::Index>(i));
      p += std::norm(amplitudes_(static_cast<Eigen::Index>(i)));
    }
  }
  if (p < kEigenClamp) {
    throw std::domain_error("collapse_register: outcome has zero probability");
  }
  out /= std::sqrt(p);
  return PureState(qubits_, std::move(out));
}

PureState PureState::xor_register(const std::vector<int>& reg,
                                  std::uint64_t mask) const {
  check_register(reg);
  std::uint64_t index_mask = 0;
  for (std::size_t k = 0; k < reg.size(); ++k) {
    if ((mask >> (reg.size() - 1 - k)) & 1) {
      index_mask |= 1ULL << (qubits_ - 1 - reg[k]);
    }
  }
  Vector out(amplitudes_.size());
  std::uint64_t dim = static_cast<std::uint64_t>(amplitudes_.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    out(static_cast<Eigen::Index>(i ^ index_mask)) =
        amplitudes_(static_cast<Eigen::Index>(i));
  }
  return PureState(qubits_, std::move(out));
}

std::uint64_t PureState::read_basis_register(const std::vector<int>& reg) const {
  auto probs = register_distribution(reg);
  for (std::size_t v = 0; v < probs.size(); ++v) {
    if (probs[v] > 1.0 - kStateTol) return v;
  }
  throw std::domain_error("read_basis_register: register not in a basis state");
}

PureState PureState::drop_register(const std::vector<int>& reg,
                                   std::uint64_t expected) const {
  check_register(reg);
  if (read_basis_register(reg) != expected) {
    throw std::domain_error("drop_register: register not in expected state");
  }
  std::vector<int> kept;
  for (int q = 0; q < qubits_; ++q) {
    bool in_reg = false;
    for (int r : reg) in_reg = in_reg || (r == q);
    if (!in_reg) kept.push_back(q);
  }
  Eigen::Index new_dim = Eigen::Index{1} << kept.size();
  Vector out = Vector::Zero(new_dim);
  std::uint64_t dim = static_cast<std::uint64_t>(amplitudes_.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (register_value(i, reg) != expected) continue;
    out(static_cast<Eigen::Index>(register_value(i, kept))) =
        amplitudes_(static_cast<Eigen::Index>(i));
  }
  double norm = out.norm();
  if (std::abs(norm - 1.0) > 1e-7) {
    throw std::domain_error("drop_register: residual not normalized");
  }
  out /= norm;
  return PureState(static_cast<int>(kept.size()), std::move(out));
}

PureState PureState::factor_register(const std::vector<int>& reg) const {
  check_register(reg);
  std::vector<int> rest;
  for (int q = 0; q < qubits_; ++q) {
    bool in_reg = false;
    for (int r : reg) in_reg = in_reg || (r == q);
    if (!in_reg) rest.push_back(q);
  }
  Eigen::Index rows = Eigen::Index{1} << reg.size();
  Eigen::Index cols = Eigen::Index{1} << rest.size();
  Matrix m(rows, cols);
  std::uint64_t dim = static_cast<std::uint64_t>(amplitudes_.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    m(static_cast<Eigen::Index>(register_value(i, reg)),
      static_cast<Eigen::Index>(register_value(i, rest))) =
        amplitudes_(static_cast<Eigen::Index>(i));
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 1; k < sv.size(); ++k) {
    if (sv(k) > 1e-7) {
      throw std::domain_error(
          "factor_register: state entangled across the requested cut");
    }
  }
  Vector amps = svd.matrixU().col(0);
  // Fix the global phase so the factor is deterministic.
  Eigen::Index pivot = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (std::norm(amps(i)) > best) {
      best = std::norm(amps(i));
      pivot = i;
    }
  }
  Complex phase = amps(pivot) / std::abs(amps(pivot));
  amps /= phase;
  return PureState::from_amplitudes(std::move(amps));
}

DensityOperator DensityOperator::from_matrix(Matrix m, int cap) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("DensityOperator: matrix must be square");
  }
  int n = qubits_for_dim(m.rows());
  if (n > cap) {
    throw std::invalid_argument("DensityOperator: qubit count exceeds cap");
  }
  if (hermiticity_defect(m) > kStateTol) {
    throw std::invalid_argument("DensityOperator: matrix not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > kStateTol ||
      std::abs(m.trace().imag()) > kStateTol) {
    throw std::invalid_argument("DensityOperator: trace must be 1");
  }
  if (min_eigenvalue(m) < -kStateTol) {
    throw std::invalid_argument("DensityOperator: matrix not PSD");
  }
  return DensityOperator(n, std::move(m));
}

DensityOperator DensityOperator::pure(const PureState& psi, int cap) {
  if (psi.qubits() > cap) {
    throw std::invalid_argument("DensityOperator::pure: qubit cap exceeded");
  }
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityOperator(psi.qubits(), std::move(m));
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double operator_norm(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double trace_distance(const DensityOperator& rho,
                      const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Matrix diff = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) < kEigenClamp) continue;
    sum += std::abs(lambda);
  }
  return 0.5 * sum;
}

}  // namespace caromlab::qsim
