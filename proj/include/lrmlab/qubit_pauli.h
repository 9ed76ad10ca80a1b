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

#ifndef LRMLAB_QUBIT_PAULI_H
#define LRMLAB_QUBIT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lrmlab {

/// Bit-packed Pauli string on qubits: packed x and z bit vectors plus a
/// power of i. Site (1,1) is Y, so {I,X,Y,Z}^n has phase 0. This is the fast
/// path of PauliOperator for all-qubit configurations and agrees with it
/// bit-for-bit.
class QubitPauli {
   public:
    QubitPauli() = default;
    explicit QubitPauli(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_words() const {
        return x_.size();
    }

    /// Exponent of i, in [0, 4).
    uint32_t phase() const {
        return phase_;
    }
    void set_phase(uint32_t phase) {
        phase_ = phase & 3;
    }

    bool xbit(size_t q) const {
        return (x_[q >> 6] >> (q & 63)) & 1;
    }
    bool zbit(size_t q) const {
        return (z_[q >> 6] >> (q & 63)) & 1;
    }
    void set(size_t q, bool x, bool z);

    std::span<const uint64_t> xs() const {
        return x_;
    }
    std::span<const uint64_t> zs() const {
        return z_;
    }
    std::span<uint64_t> xs() {
        return x_;
    }
    std::span<uint64_t> zs() {
        return z_;
    }

    /// Right multiplication: *this <- (*this) * other.
    QubitPauli &operator*=(const QubitPauli &other);

    bool commutes(const QubitPauli &other) const;

    bool is_identity_pattern() const;
    size_t weight() const;
    std::vector<size_t> support() const;

    /// Same pattern, phase 0.
    QubitPauli hermitian_part() const;

    bool operator==(const QubitPauli &other) const = default;

   private:
    size_t num_qubits_ = 0;
    uint32_t phase_ = 0;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
};

QubitPauli operator*(QubitPauli lhs, const QubitPauli &rhs);

}  // namespace lrmlab

#endif
