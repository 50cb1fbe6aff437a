// Copyright 2026 The werner-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "werner_teleport/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "werner_teleport/error.hpp"

namespace werner_teleport {
namespace {

bool valid_dim(Eigen::Index d) { return d == 2 || d == 4 || d == 8; }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw InvalidArgument(msg.str());
  }
}

// Bit of qubit q (big-endian) inside a basis index of an n-qubit register.
std::size_t bit_of(std::size_t index, std::size_t q, std::size_t n) {
  return (index >> (n - 1 - q)) & 1U;
}

}  // namespace

ComplexMatrix::ComplexMatrix(Storage entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || !valid_dim(m_.rows())) {
    std::ostringstream msg;
    msg << "ComplexMatrix: dimension must be 2, 4 or 8 (got " << m_.rows() << "x" << m_.cols()
        << ")";
    throw InvalidArgument(msg.str());
  }
  if (!m_.allFinite()) throw InvalidArgument("ComplexMatrix: entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : ComplexMatrix([&] {
        if (row_major.size() != dim * dim)
          throw InvalidArgument("ComplexMatrix: entry count does not match dim*dim");
        const auto d = static_cast<Eigen::Index>(dim);
        Storage s(d, d);
        auto it = row_major.begin();
        for (Eigen::Index i = 0; i < d; ++i)
          for (Eigen::Index j = 0; j < d; ++j) s(i, j) = *it++;
        return s;
      }()) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return ComplexMatrix(Storage::Identity(d, d));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return ComplexMatrix(Storage::Zero(d, d));
}

std::size_t ComplexMatrix::qubit_count() const noexcept {
  return static_cast<std::size_t>(std::countr_zero(dim()));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(m_.adjoint()); }

ComplexMatrix ComplexMatrix::conj() const { return ComplexMatrix(m_.conjugate()); }

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  return ComplexMatrix(a.m_ * b.m_);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator+");
  return ComplexMatrix(a.m_ + b.m_);
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator-");
  return ComplexMatrix(a.m_ - b.m_);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(s * a.m_); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix::Storage h = 0.5 * (m.storage() + m.storage().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix::Storage> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

DensityMatrix validate_density(const ComplexMatrix& m) {
  const auto& s = m.storage();
  const double herm = (s - s.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "not Hermitian: max |m_ij - conj(m_ji)| = " << herm;
    throw DensityError(DensityError::Kind::NonHermitian, msg.str());
  }
  const Complex tr = s.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << "trace is " << tr.real() << (tr.imag() != 0.0 ? " (complex)" : "") << ", expected 1";
    throw DensityError(DensityError::Kind::TraceNotOne, msg.str());
  }
  const double min_ev = hermitian_eigenvalues(m).front();
  if (min_ev < -kPositivityTolerance) {
    std::ostringstream msg;
    msg << "not positive semidefinite: minimum eigenvalue " << min_ev;
    throw DensityError(DensityError::Kind::NotPositive, msg.str());
  }
  return DensityMatrix(m);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto na = a.storage().rows();
  const auto nb = b.storage().rows();
  if (static_cast<std::size_t>(na * nb) > kMaxDim) {
    std::ostringstream msg;
    msg << "kron: result dimension " << na * nb << " exceeds " << kMaxDim;
    throw InvalidArgument(msg.str());
  }
  ComplexMatrix::Storage out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.storage()(i, j) * b.storage();
  return ComplexMatrix(std::move(out));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& keep) {
  const std::size_t n = m.qubit_count();
  std::vector<std::size_t> kept(keep);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty() || kept.size() >= n) {
    throw InvalidArgument("partial_trace: keep must be a nonempty proper subset of the qubits");
  }
  if (kept.back() >= n) {
    std::ostringstream msg;
    msg << "partial_trace: qubit index " << kept.back() << " out of range for " << n << " qubits";
    throw InvalidArgument(msg.str());
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  const std::size_t dk = std::size_t{1} << kept.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  // Full-register index from a kept-subsystem index and a traced-subsystem index.
  auto compose = [&](std::size_t k, std::size_t t) {
    std::size_t full = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      full |= bit_of(k, i, kept.size()) << (n - 1 - kept[i]);
    for (std::size_t i = 0; i < traced.size(); ++i)
      full |= bit_of(t, i, traced.size()) << (n - 1 - traced[i]);
    return full;
  };

  const auto d = static_cast<Eigen::Index>(dk);
  ComplexMatrix::Storage out = ComplexMatrix::Storage::Zero(d, d);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j)
      for (std::size_t t = 0; t < dt; ++t)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            m(compose(i, t), compose(j, t));
  return ComplexMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
  return validate_density(partial_trace(rho.matrix(), keep));
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_of_product");
  return (a.storage().array() * b.storage().transpose().array()).sum();
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  const auto& s = u.storage();
  const auto id = ComplexMatrix::Storage::Identity(s.rows(), s.cols());
  return (s * s.adjoint() - id).cwiseAbs().maxCoeff() <= tolerance;
}

DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
  require_same_dim(u, rho.matrix(), "conjugate");
  if (!is_unitary(u)) throw InvalidArgument("conjugate: operator is not unitary within 1e-10");
  const auto& s = u.storage();
  ComplexMatrix::Storage out = s * rho.matrix().storage() * s.adjoint();
  // Restore exact Hermiticity lost to rounding in the triple product.
  out = 0.5 * (out + out.adjoint()).eval();
  return validate_density(ComplexMatrix(std::move(out)));
}

LadderOperators ladder_operators() {
  return {ComplexMatrix(2, {1.0, 0.0, 0.0, 0.0}), ComplexMatrix(2, {0.0, 0.0, 0.0, 1.0}),
          ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0}), ComplexMatrix(2, {0.0, 0.0, 1.0, 0.0})};
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix pauli_y() {
  const Complex i{0.0, 1.0};
  return ComplexMatrix(2, {0.0, -i, i, 0.0});
}

ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace werner_teleport
