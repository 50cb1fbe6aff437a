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

// Dense complex matrices for 1 to 3 qubits and the density-matrix layer
// built on top of them.
//
// Qubit ordering is big-endian: qubit 0 is the most significant bit of the
// basis index. For a three-qubit register |q0 q1 q2>, basis index is
// 4*q0 + 2*q1 + q2.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace werner_teleport {

using Complex = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr std::size_t kMaxDim = 8;

// Square complex matrix of dimension 2, 4 or 8 with finite entries.
class ComplexMatrix {
 public:
  using Storage = Eigen::MatrixXcd;

  explicit ComplexMatrix(Storage entries);
  // Row-major entry list; its size must be dim*dim.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  std::size_t qubit_count() const noexcept;

  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const Storage& storage() const noexcept { return m_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  Complex trace() const { return m_.trace(); }

  // Largest |a_ij - b_ij|; dims must match.
  double max_abs_diff(const ComplexMatrix& other) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  Storage m_;
};

// A ComplexMatrix that has passed validate_density: Hermitian, unit trace,
// positive semidefinite. Only validate_density constructs one.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  std::size_t qubit_count() const noexcept { return m_.qubit_count(); }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  friend DensityMatrix validate_density(const ComplexMatrix& m);

  ComplexMatrix m_;
};

// Throws DensityError naming the first violated invariant, checked in the
// order Hermiticity, trace, positivity.
DensityMatrix validate_density(const ComplexMatrix& m);

// Spectrum of a Hermitian matrix in ascending order. The input is
// symmetrized as (m + m^dagger)/2 before diagonalization.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Tensor product with a's indices as the most significant; result dim <= 8.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced operator on the listed qubits (duplicates ignored). `keep` must be
// a nonempty proper subset of {0, ..., qubit_count-1}. The kept qubits retain
// their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// Tr[a b] without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& u, double tolerance = kUnitaryTolerance);

// u rho u^dagger. Throws InvalidArgument if u is not unitary within 1e-10
// or the dimensions differ.
DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho);

struct LadderOperators {
  ComplexMatrix i_plus;   // |0><0|
  ComplexMatrix i_minus;  // |1><1|
  ComplexMatrix r_plus;   // |0><1|
  ComplexMatrix r_minus;  // |1><0|
};

LadderOperators ladder_operators();

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace werner_teleport
