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

#include "hexmon/dense_reference.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hexmon {

namespace {

constexpr std::size_t kMaxQubits = 10;

std::complex<double> i_pow(unsigned k) {
  switch (k & 3) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

}  // namespace

DenseReference::DenseReference(std::size_t num_qubits) : n_(num_qubits), dim_(std::size_t{1} << num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw DimensionError("DenseReference: supports 1.." + std::to_string(kMaxQubits) + " qubits");
  }
  rho_ = Matrix::Zero(dim_, dim_);
}

DenseReference DenseReference::computational_basis_state(std::size_t num_qubits) {
  DenseReference out(num_qubits);
  out.rho_(0, 0) = 1.0;
  return out;
}

DenseReference DenseReference::maximally_mixed(std::size_t num_qubits) {
  DenseReference out(num_qubits);
  out.rho_ = Matrix::Identity(out.dim_, out.dim_) / static_cast<double>(out.dim_);
  return out;
}

DenseReference DenseReference::from_generators(std::size_t num_qubits, const std::vector<PauliOperator>& generators) {
  DenseReference out(num_qubits);
  Matrix p = Matrix::Identity(out.dim_, out.dim_);
  for (const PauliOperator& g : generators) {
    p = p * (Matrix::Identity(out.dim_, out.dim_) + pauli_matrix(g)) * 0.5;
  }
  const double trace = p.trace().real();
  if (trace < 0.5) {
    throw std::invalid_argument("DenseReference::from_generators: generators have no common +1 eigenvector");
  }
  out.rho_ = p / trace;
  return out;
}

DenseReference::Sparse DenseReference::sparse_pauli(const PauliOperator& op) {
  const std::size_t n = op.num_qubits();
  if (n == 0 || n > kMaxQubits) {
    throw DimensionError("pauli_matrix: supports 1.." + std::to_string(kMaxQubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  std::uint64_t xm = 0;
  std::uint64_t zm = 0;
  unsigned num_y = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const char c = op.letter(q);
    if (c == 'X' || c == 'Y') {
      xm |= std::uint64_t{1} << q;
    }
    if (c == 'Z' || c == 'Y') {
      zm |= std::uint64_t{1} << q;
    }
    num_y += c == 'Y';
  }
  // Y = i X Z, so P = sign * i^{#Y} X^x Z^z.
  const std::complex<double> global = (op.negative() ? -1.0 : 1.0) * i_pow(num_y);
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  entries.reserve(static_cast<std::size_t>(dim));
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    const double z_sign = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
    entries.emplace_back(static_cast<Eigen::Index>(b ^ xm), static_cast<Eigen::Index>(b), global * z_sign);
  }
  Sparse m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

DenseReference::Matrix DenseReference::pauli_matrix(const PauliOperator& op) { return Matrix(sparse_pauli(op)); }

double DenseReference::expectation(const PauliOperator& op) const {
  if (op.num_qubits() != n_) {
    throw DimensionError("expectation: operator size mismatch");
  }
  return (sparse_pauli(op) * rho_).trace().real();
}

double DenseReference::project(const PauliOperator& op, int value) {
  if (value != 1 && value != -1) {
    throw std::invalid_argument("project: value must be +1 or -1");
  }
  if (op.num_qubits() != n_) {
    throw DimensionError("project: operator size mismatch");
  }
  Sparse id(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  id.setIdentity();
  const Sparse p = (id + static_cast<double>(value) * sparse_pauli(op)) * 0.5;
  const Matrix left = p * rho_;
  const Matrix projected = (p * left.adjoint()).adjoint();
  const double prob = projected.trace().real();
  if (prob < 1e-12) {
    throw std::domain_error("project: outcome has zero probability");
  }
  rho_ = projected / prob;
  return prob;
}

int DenseReference::measure(const PauliOperator& op, Rng& rng) {
  const double p_plus = 0.5 * (1.0 + expectation(op));
  const int value = rng.uniform() < p_plus ? 1 : -1;
  project(op, value);
  return value;
}

void DenseReference::conjugate(const Sparse& u) {
  const Matrix left = u * rho_;
  rho_ = (u * left.adjoint()).adjoint();
}

DenseReference::Sparse DenseReference::single_qubit_operator(std::size_t q, const Eigen::Matrix2cd& u) const {
  if (q >= n_) {
    throw std::out_of_range("DenseReference: qubit out of range");
  }
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  const std::uint64_t bit = std::uint64_t{1} << q;
  for (std::uint64_t b = 0; b < dim_; ++b) {
    const int in = (b & bit) ? 1 : 0;
    for (int out = 0; out < 2; ++out) {
      const std::uint64_t row = out ? (b | bit) : (b & ~bit);
      if (u(out, in) != 0.0) {
        entries.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b), u(out, in));
      }
    }
  }
  Sparse m(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

void DenseReference::hadamard(std::size_t q) {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  conjugate(single_qubit_operator(q, h / std::sqrt(2.0)));
}

void DenseReference::phase(std::size_t q) {
  Eigen::Matrix2cd s;
  s << 1, 0, 0, std::complex<double>(0, 1);
  conjugate(single_qubit_operator(q, s));
}

void DenseReference::phase_dagger(std::size_t q) {
  Eigen::Matrix2cd s;
  s << 1, 0, 0, std::complex<double>(0, -1);
  conjugate(single_qubit_operator(q, s));
}

void DenseReference::pauli_x(std::size_t q) {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  conjugate(single_qubit_operator(q, x));
}

void DenseReference::cnot(std::size_t control, std::size_t target) {
  if (control >= n_ || target >= n_ || control == target) {
    throw std::out_of_range("DenseReference::cnot: bad qubits");
  }
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  const std::uint64_t cb = std::uint64_t{1} << control;
  const std::uint64_t tb = std::uint64_t{1} << target;
  for (std::uint64_t b = 0; b < dim_; ++b) {
    entries.emplace_back(static_cast<Eigen::Index>((b & cb) ? (b ^ tb) : b), static_cast<Eigen::Index>(b), 1.0);
  }
  Sparse m(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  m.setFromTriplets(entries.begin(), entries.end());
  conjugate(m);
}

double DenseReference::entropy_bits(const BitVector& region) const {
  if (region.size() != n_) {
    throw DimensionError("entropy_bits: region size mismatch");
  }
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    (region.get(q) ? in : out).push_back(q);
  }
  const std::size_t da = std::size_t{1} << in.size();
  const std::size_t db = std::size_t{1} << out.size();
  auto compose = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < in.size(); ++k) {
      idx |= ((a >> k) & 1) << in[k];
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
      idx |= ((b >> k) & 1) << out[k];
    }
    return idx;
  };
  Matrix reduced = Matrix::Zero(da, da);
  for (std::uint64_t a1 = 0; a1 < da; ++a1) {
    for (std::uint64_t a2 = 0; a2 < da; ++a2) {
      std::complex<double> acc = 0;
      for (std::uint64_t b = 0; b < db; ++b) {
        acc += rho_(compose(a1, b), compose(a2, b));
      }
      reduced(a1, a2) = acc;
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(reduced, Eigen::EigenvaluesOnly);
  double s = 0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda > 1e-12) {
      s -= lambda * std::log2(lambda);
    }
  }
  return s;
}

double DenseReference::entropy_bits() const {
  BitVector all(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    all.set(q, true);
  }
  return entropy_bits(all);
}

double DenseReference::distance(const DenseReference& other) const {
  if (other.n_ != n_) {
    throw DimensionError("distance: size mismatch");
  }
  return (rho_ - other.rho_).cwiseAbs().maxCoeff();
}

}  // namespace hexmon
