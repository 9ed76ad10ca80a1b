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

#include "lrmlab/qubit_pauli.h"

#include <bit>

#include "lrmlab/error.h"
#include "lrmlab/simd/bit_kernels.h"

namespace lrmlab {

QubitPauli::QubitPauli(size_t num_qubits)
    : num_qubits_(num_qubits), x_((num_qubits + 63) / 64, 0), z_((num_qubits + 63) / 64, 0) {
}

void QubitPauli::set(size_t q, bool x, bool z) {
    uint64_t bit = (uint64_t)1 << (q & 63);
    x_[q >> 6] = (x_[q >> 6] & ~bit) | (x ? bit : 0);
    z_[q >> 6] = (z_[q >> 6] & ~bit) | (z ? bit : 0);
}

QubitPauli &QubitPauli::operator*=(const QubitPauli &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw InvalidInput("qubit Pauli length mismatch");
    }
    uint32_t dphase = simd::kernels().mul_phase_inplace(x_.data(), z_.data(), other.x_.data(), other.z_.data(), x_.size());
    phase_ = (phase_ + other.phase_ + dphase) & 3;
    return *this;
}

QubitPauli operator*(QubitPauli lhs, const QubitPauli &rhs) {
    lhs *= rhs;
    return lhs;
}

bool QubitPauli::commutes(const QubitPauli &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw InvalidInput("qubit Pauli length mismatch");
    }
    return simd::kernels().symplectic_parity(x_.data(), z_.data(), other.x_.data(), other.z_.data(), x_.size()) == 0;
}

bool QubitPauli::is_identity_pattern() const {
    for (size_t i = 0; i < x_.size(); i++) {
        if (x_[i] | z_[i]) {
            return false;
        }
    }
    return true;
}

size_t QubitPauli::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x_.size(); i++) {
        w += std::popcount(x_[i] | z_[i]);
    }
    return w;
}

std::vector<size_t> QubitPauli::support() const {
    std::vector<size_t> result;
    for (size_t i = 0; i < x_.size(); i++) {
        uint64_t w = x_[i] | z_[i];
        while (w) {
            result.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

QubitPauli QubitPauli::hermitian_part() const {
    QubitPauli result = *this;
    result.phase_ = 0;
    return result;
}

}  // namespace lrmlab
