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

#include "lrmlab/logical_state.h"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "lrmlab/dense_oracle.h"
#include "lrmlab/error.h"
#include "lrmlab/pauli_operator.h"

namespace lrmlab {
namespace {

using cd = std::complex<double>;
constexpr double kStateTolerance = 1e-9;

Matrix2 bloch_matrix(const Bloch &b) {
    Matrix2 m;
    m << cd(1 + b[2], 0), cd(b[0], -b[1]), cd(b[0], b[1]), cd(1 - b[2], 0);
    return m / 2.0;
}

Bloch bloch_vector(const Matrix2 &m) {
    return {2 * m(1, 0).real(), 2 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

void check_unitary(const Eigen::MatrixXcd &u) {
    if (u.rows() != u.cols()) throw InvalidInput("gate matrix is not square");
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if ((u.adjoint() * u - id).cwiseAbs().maxCoeff() > kStateTolerance) throw InvalidInput("gate matrix is not unitary");
}

}  // namespace

namespace bloch {
Bloch t_plus() {
    return {M_SQRT1_2, M_SQRT1_2, 0};
}
Bloch magic_h() {
    return {M_SQRT1_2, 0, M_SQRT1_2};
}
}  // namespace bloch

LogicalState LogicalState::product(std::vector<Bloch> factors) {
    for (const Bloch &b : factors) {
        double norm = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
        if (!(norm <= 1 + kStateTolerance)) throw InvalidInput("Bloch vector has length > 1");
    }
    LogicalState s;
    s.k_ = factors.size();
    s.factors_ = std::move(factors);
    return s;
}

LogicalState LogicalState::dense(Eigen::MatrixXcd rho) {
    const Eigen::Index dim = rho.rows();
    if (rho.cols() != dim || dim < 1 || (dim & (dim - 1)) != 0)
        throw InvalidInput("density matrix must be square with power-of-two size");
    size_t k = 0;
    while ((Eigen::Index(1) << k) < dim) ++k;
    if (k > kDenseQubitCap) throw CapExceeded("dense logical states are limited to 12 qubits");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) throw InvalidInput("density matrix is not Hermitian");
    if (std::abs(rho.trace() - cd(1, 0)) > kStateTolerance) throw InvalidInput("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-12) throw InvalidInput("density matrix is not positive semidefinite");
    LogicalState s;
    s.k_ = k;
    s.is_product_ = false;
    s.rho_ = std::move(rho);
    return s;
}

LogicalState LogicalState::pure(const Eigen::VectorXcd &psi) {
    if (std::abs(psi.norm() - 1) > kStateTolerance) throw InvalidInput("state vector is not normalized");
    return dense(psi * psi.adjoint());
}

LogicalState LogicalState::parse(std::string_view label) {
    if (label.empty()) throw InvalidInput("empty logical state label");
    std::vector<Bloch> factors;
    for (char c : label) {
        switch (c) {
            case '+': factors.push_back(bloch::kPlus); break;
            case '-': factors.push_back(bloch::kMinus); break;
            case '0': factors.push_back(bloch::kZero); break;
            case '1': factors.push_back(bloch::kOne); break;
            case 'i': factors.push_back(bloch::kPlusI); break;
            case 'j': factors.push_back(bloch::kMinusI); break;
            case 'T': factors.push_back(bloch::t_plus()); break;
            case 'M': factors.push_back(bloch::magic_h()); break;
            default: throw InvalidInput(std::string("unknown state character '") + c + "' (use +-01ijTM)");
        }
    }
    return product(std::move(factors));
}

const Eigen::MatrixXcd &LogicalState::matrix() const {
    if (is_product_) throw Unsupported("matrix() on a product state; use to_dense()");
    return rho_;
}

double LogicalState::expectation(const QubitPauli &q) const {
    if (q.num_qubits() != k_)
        throw InvalidInput("logical Pauli has " + std::to_string(q.num_qubits()) + " qubits, state has " +
                           std::to_string(k_));
    if (q.phase() & 1) throw InvalidInput("logical Pauli is not Hermitian");
    double sign = q.phase() == 2 ? -1.0 : 1.0;
    if (!is_product_) return sign * dense::expectation(rho_, PauliOperator::from_qubit(q.hermitian_part())).real();
    double value = sign;
    for (size_t j = 0; j < k_ && value != 0; ++j) {
        bool x = q.xbit(j), z = q.zbit(j);
        if (x && z) value *= factors_[j][1];
        else if (x) value *= factors_[j][0];
        else if (z) value *= factors_[j][2];
    }
    return value;
}

LogicalState LogicalState::apply(size_t target, const Matrix2 &u) const {
    if (target >= k_) throw InvalidInput("gate target " + std::to_string(target + 1) + " out of range");
    check_unitary(u);
    if (is_product_) {
        LogicalState s = *this;
        s.factors_[target] = bloch_vector(u * bloch_matrix(factors_[target]) * u.adjoint());
        return s;
    }
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t j = 0; j < k_; ++j) {
        Eigen::MatrixXcd factor = j == target ? Eigen::MatrixXcd(u) : Eigen::MatrixXcd::Identity(2, 2);
        full = Eigen::kroneckerProduct(full, factor).eval();
    }
    return apply(full);
}

LogicalState LogicalState::apply(const Eigen::MatrixXcd &u) const {
    if (u.rows() != (Eigen::Index(1) << k_)) throw InvalidInput("gate matrix size does not match 2^k");
    check_unitary(u);
    return dense(u * to_dense() * u.adjoint());
}

Eigen::MatrixXcd LogicalState::to_dense() const {
    if (!is_product_) return rho_;
    if (k_ > kDenseQubitCap) throw CapExceeded("dense logical states are limited to 12 qubits");
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
    for (const Bloch &b : factors_) full = Eigen::kroneckerProduct(full, Eigen::MatrixXcd(bloch_matrix(b))).eval();
    return full;
}

}  // namespace lrmlab
