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

#ifndef LRMLAB_LOGICAL_STATE_H
#define LRMLAB_LOGICAL_STATE_H

#include <array>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "lrmlab/qubit_pauli.h"

namespace lrmlab {

using Bloch = std::array<double, 3>;
using Matrix2 = Eigen::Matrix2cd;

/// Single-qubit states by Bloch vector.
namespace bloch {
inline constexpr Bloch kPlus{1, 0, 0};
inline constexpr Bloch kMinus{-1, 0, 0};
inline constexpr Bloch kZero{0, 0, 1};
inline constexpr Bloch kOne{0, 0, -1};
inline constexpr Bloch kPlusI{0, 1, 0};
inline constexpr Bloch kMinusI{0, -1, 0};
/// T|+>.
Bloch t_plus();
/// cos(pi/8)|0> + sin(pi/8)|1>, the +1 eigenstate of (X+Z)/sqrt(2).
Bloch magic_h();
}  // namespace bloch

/// A k-qubit logical density matrix, stored either as a product of Bloch
/// vectors or as a dense 2^k x 2^k matrix (qubit 0 most significant).
class LogicalState {
   public:
    static constexpr size_t kDenseQubitCap = 12;

    static LogicalState product(std::vector<Bloch> factors);
    /// Checks Hermiticity, unit trace and positivity.
    static LogicalState dense(Eigen::MatrixXcd rho);
    static LogicalState pure(const Eigen::VectorXcd &psi);

    /// One character per qubit from "+-01ijTM" (i, j are the +/-Y
    /// eigenstates; T is T|+>, M the (X+Z)/sqrt(2) eigenstate).
    static LogicalState parse(std::string_view label);

    size_t num_qubits() const {
        return k_;
    }
    bool is_product() const {
        return is_product_;
    }
    const std::vector<Bloch> &factors() const {
        return factors_;
    }
    const Eigen::MatrixXcd &matrix() const;

    /// Tr(Q rho) for a Hermitian k-qubit Pauli.
    double expectation(const QubitPauli &q) const;

    /// rho -> U rho U^dagger with U acting on `target`.
    LogicalState apply(size_t target, const Matrix2 &u) const;
    /// rho -> U rho U^dagger for a 2^k x 2^k unitary.
    LogicalState apply(const Eigen::MatrixXcd &u) const;

    Eigen::MatrixXcd to_dense() const;

   private:
    size_t k_ = 0;
    bool is_product_ = true;
    std::vector<Bloch> factors_;
    Eigen::MatrixXcd rho_;
};

}  // namespace lrmlab

#endif
