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

#include "lrmlab/dense_oracle.h"

#include <cmath>
#include <numbers>

#include "lrmlab/error.h"

namespace lrmlab::dense {
namespace {

uint64_t checked_dimension(const LocalConfiguration &config, uint64_t cap, const char *what) {
    uint64_t dim = config.total_dimension();
    if (dim == 0 || dim > cap) {
        throw CapExceeded(std::string(what) + " needs total dimension <= " + std::to_string(cap) +
                          " (configuration " + config.str() + ")");
    }
    return dim;
}

}  // namespace

std::complex<double> root_of_unity(int64_t t, uint32_t l) {
    int64_t m = 2 * (int64_t)l;
    t %= m;
    if (t < 0) {
        t += m;
    }
    if ((2 * t) % l == 0) {
        static const std::complex<double> kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return kQuarter[(2 * t) / l];
    }
    return std::polar(1.0, std::numbers::pi * (double)t / (double)l);
}

BasisImage apply_to_basis(const PauliOperator &p, uint64_t column) {
    const LocalConfiguration &config = p.config();
    uint32_t l = config.lcm();
    size_t n = p.num_sites();
    int64_t phase = p.phase();
    uint64_t row = 0;
    uint64_t stride = 1;
    for (size_t s = n; s-- > 0;) {
        uint64_t q = config.dim(s);
        uint64_t digit = column % q;
        column /= q;
        uint64_t a = p.x(s), b = p.z(s);
        // S(a,b)|d> = e^{i pi (ab + 2bd)/q} |d + a>
        phase += (int64_t)((a * b + 2 * b * digit) % (2 * q)) * (l / q);
        row += ((digit + a) % q) * stride;
        stride *= q;
    }
    return {row, root_of_unity(phase, l)};
}

Matrix pauli_matrix(const PauliOperator &p) {
    uint64_t dim = checked_dimension(p.config(), kMatrixDimensionCap, "pauli_matrix");
    Matrix m = Matrix::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    for (uint64_t c = 0; c < dim; c++) {
        auto img = apply_to_basis(p, c);
        m((Eigen::Index)img.row, (Eigen::Index)c) = img.value;
    }
    return m;
}

Vector apply(const PauliOperator &p, const Vector &psi) {
    uint64_t dim = checked_dimension(p.config(), kStateDimensionCap, "apply");
    if ((uint64_t)psi.size() != dim) {
        throw InvalidInput("state vector length does not match the configuration");
    }
    Vector out = Vector::Zero(psi.size());
    for (uint64_t c = 0; c < dim; c++) {
        auto img = apply_to_basis(p, c);
        out((Eigen::Index)img.row) += img.value * psi((Eigen::Index)c);
    }
    return out;
}

std::complex<double> expectation(const Matrix &rho, const PauliOperator &p) {
    uint64_t dim = checked_dimension(p.config(), kMatrixDimensionCap, "expectation");
    if ((uint64_t)rho.rows() != dim || (uint64_t)rho.cols() != dim) {
        throw InvalidInput("density matrix shape does not match the configuration");
    }
    // Tr(rho P) = sum_c rho(c, row(c)) * value(c)
    std::complex<double> total = 0;
    for (uint64_t c = 0; c < dim; c++) {
        auto img = apply_to_basis(p, c);
        total += rho((Eigen::Index)c, (Eigen::Index)img.row) * img.value;
    }
    return total;
}

std::complex<double> expectation(const Vector &psi, const PauliOperator &p) {
    return psi.dot(apply(p, psi));
}

Matrix codespace_projector(const StabilizerGroup &group) {
    uint64_t dim = checked_dimension(group.config(), kMatrixDimensionCap, "codespace_projector");
    auto elements = group.elements(dim);
    Matrix proj = Matrix::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    for (const auto &g : elements) {
        for (uint64_t c = 0; c < dim; c++) {
            auto img = apply_to_basis(g, c);
            proj((Eigen::Index)img.row, (Eigen::Index)c) += img.value;
        }
    }
    proj /= (double)elements.size();
    return proj;
}

Matrix encode(const StabilizerCode &code, const Matrix &rho_k) {
    uint64_t dim = checked_dimension(code.config(), kMatrixDimensionCap, "encode");
    size_t k = code.logicals().size();
    if ((uint64_t)rho_k.rows() != (1ull << k) || rho_k.rows() != rho_k.cols()) {
        throw InvalidInput("logical density matrix must be 2^k x 2^k with k = " + std::to_string(k));
    }
    Matrix proj = codespace_projector(code.group());
    LocalConfiguration logical_config = LocalConfiguration::qubits(k);
    Matrix sum = Matrix::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    uint64_t count = 1ull << (2 * k);
    for (uint64_t index = 0; index < count; index++) {
        QubitPauli q(k);
        for (size_t i = 0; i < k; i++) {
            q.set(i, (index >> (2 * i)) & 1, (index >> (2 * i + 1)) & 1);
        }
        std::complex<double> weight = expectation(rho_k, PauliOperator::from_qubit(q, logical_config));
        if (std::abs(weight) == 0.0) {
            continue;
        }
        PauliOperator bar = PauliOperator::from_qubit(code.encode_logical(q), code.config());
        for (uint64_t c = 0; c < dim; c++) {
            auto img = apply_to_basis(bar, c);
            sum.row((Eigen::Index)img.row) += weight * img.value * proj.row((Eigen::Index)c);
        }
    }
    return sum / (double)(1ull << k);
}

}  // namespace lrmlab::dense
