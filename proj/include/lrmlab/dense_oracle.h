// Copyright 2026 The lrmlab Authors
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

#ifndef LRMLAB_DENSE_ORACLE_H
#define LRMLAB_DENSE_ORACLE_H

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "lrmlab/pauli_operator.h"
#include "lrmlab/stabilizer_code.h"
#include "lrmlab/stabilizer_group.h"

// Dense brute-force reference computations for small systems. Basis index
// convention: site 0 is the most significant mixed-radix digit, so the
// matrix of a Pauli string is the Kronecker product of its site matrices in
// site order.

namespace lrmlab::dense {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest total dimension for matrix-valued results.
constexpr uint64_t kMatrixDimensionCap = 1u << 12;
/// Largest total dimension for state-vector computations.
constexpr uint64_t kStateDimensionCap = 1u << 14;

/// e^{i pi t / L}, exact for multiples of L/2.
std::complex<double> root_of_unity(int64_t t, uint32_t l);

struct BasisImage {
    uint64_t row;
    std::complex<double> value;
};

/// p |column> = value |row>.
BasisImage apply_to_basis(const PauliOperator &p, uint64_t column);

Matrix pauli_matrix(const PauliOperator &p);
Vector apply(const PauliOperator &p, const Vector &psi);

/// Tr(rho p).
std::complex<double> expectation(const Matrix &rho, const PauliOperator &p);
/// <psi| p |psi>.
std::complex<double> expectation(const Vector &psi, const PauliOperator &p);

/// (1/|G|) sum_{g in G} g.
Matrix codespace_projector(const StabilizerGroup &group);

/// The encoded state (2^{-k} sum_Q Tr(Q rho) Q_bar) Pi for a k-qubit
/// density matrix rho, using the code's stored logical representatives.
Matrix encode(const StabilizerCode &code, const Matrix &rho_k);

}  // namespace lrmlab::dense

#endif
