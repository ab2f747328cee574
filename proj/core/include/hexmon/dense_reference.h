// Copyright 2026 The hexmon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEXMON_DENSE_REFERENCE_H
#define HEXMON_DENSE_REFERENCE_H

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "hexmon/bit_matrix.h"
#include "hexmon/pauli.h"
#include "hexmon/rng.h"

namespace hexmon {

/// Exact density-matrix simulator for small registers (n <= 10), used as the
/// reference the stabilizer tableau is checked against. Qubit j is bit j of
/// the basis index.
class DenseReference {
 public:
  using Matrix = Eigen::MatrixXcd;

  static DenseReference computational_basis_state(std::size_t num_qubits);
  static DenseReference maximally_mixed(std::size_t num_qubits);
  /// Normalized projector onto the joint +1 eigenspace of commuting generators.
  static DenseReference from_generators(std::size_t num_qubits, const std::vector<PauliOperator>& generators);

  std::size_t num_qubits() const { return n_; }
  const Matrix& rho() const { return rho_; }

  /// Full 2^n x 2^n matrix of a signed Pauli.
  static Matrix pauli_matrix(const PauliOperator& op);

  /// Tr(rho P).
  double expectation(const PauliOperator& op) const;
  /// Projects onto outcome `value` of P and renormalizes; returns the prior
  /// probability of that outcome.
  double project(const PauliOperator& op, int value);
  /// Samples an outcome with the Born rule (one rng.uniform() draw) and projects.
  int measure(const PauliOperator& op, Rng& rng);

  void hadamard(std::size_t q);
  void phase(std::size_t q);
  void phase_dagger(std::size_t q);
  void cnot(std::size_t control, std::size_t target);
  void pauli_x(std::size_t q);

  /// Von Neumann entropy in bits of the reduced state on `region`.
  double entropy_bits(const BitVector& region) const;
  double entropy_bits() const;

  /// Max-abs entry of rho - other.
  double distance(const DenseReference& other) const;

 private:
  using Sparse = Eigen::SparseMatrix<std::complex<double>>;

  explicit DenseReference(std::size_t num_qubits);
  static Sparse sparse_pauli(const PauliOperator& op);
  void conjugate(const Sparse& u);
  Sparse single_qubit_operator(std::size_t q, const Eigen::Matrix2cd& u) const;

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  Matrix rho_;
};

}  // namespace hexmon

#endif  // HEXMON_DENSE_REFERENCE_H
