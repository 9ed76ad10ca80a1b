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

#ifndef LRMLAB_PAULI_OPERATOR_H
#define LRMLAB_PAULI_OPERATOR_H

#include <cstdint>
#include <vector>

#include "lrmlab/local_configuration.h"

namespace lrmlab {

class QubitPauli;

/// A generalized Pauli string over a mixed local configuration.
///
/// The operator is e^{i pi phase / L} times the tensor product over sites of
/// S(a_j, b_j) = e^{i pi a_j b_j / q_j} X^{a_j} Z^{b_j}, where
/// X|k> = |k+1 mod q>, Z|k> = e^{2 pi i k / q}|k> and L = lcm(q_j).
/// The e^{i pi ab / q} factor makes the qubit site (1,1) the Hermitian Y, so
/// every element of {I,X,Y,Z}^n has phase 0. Exponents are kept reduced:
/// a_j, b_j in [0, q_j), phase in [0, 2L).
class PauliOperator {
   public:
    static PauliOperator identity(LocalConfiguration config);

    /// Reduces every exponent. Throws InvalidInput on length mismatch.
    PauliOperator(LocalConfiguration config, int64_t phase, std::vector<int64_t> x, std::vector<int64_t> z);

    const LocalConfiguration &config() const {
        return config_;
    }
    size_t num_sites() const {
        return x_.size();
    }
    uint32_t phase() const {
        return phase_;
    }
    uint32_t x(size_t site) const {
        return x_[site];
    }
    uint32_t z(size_t site) const {
        return z_[site];
    }

    /// Same pattern with the phase replaced.
    PauliOperator with_phase(int64_t phase) const;

    bool is_identity_pattern() const;
    bool is_identity() const {
        return phase_ == 0 && is_identity_pattern();
    }

    std::vector<size_t> support() const;
    size_t weight() const;

    PauliOperator inverse() const;
    PauliOperator pow(uint64_t exponent) const;

    /// Only valid for all-qubit configurations.
    QubitPauli to_qubit() const;
    static PauliOperator from_qubit(const QubitPauli &p);
    /// `config` must be the all-qubit configuration of matching length.
    static PauliOperator from_qubit(const QubitPauli &p, const LocalConfiguration &config);

    bool operator==(const PauliOperator &other) const;
    bool operator!=(const PauliOperator &other) const {
        return !(*this == other);
    }

   private:
    PauliOperator(LocalConfiguration config) : config_(std::move(config)), phase_(0) {
    }

    friend PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

    LocalConfiguration config_;
    uint32_t phase_;
    std::vector<uint16_t> x_;
    std::vector<uint16_t> z_;
};

/// Group product p*q. Throws InvalidInput on configuration mismatch.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

inline PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}

/// t in [0, 2L) with p q = e^{i pi t / L} q p. For qubits t is 0 or L.
uint32_t commutation_phase(const PauliOperator &p, const PauliOperator &q);

/// Smallest r >= 1 with p^r equal to the identity (phase 0). Always divides 2L.
uint64_t order(const PauliOperator &p);

}  // namespace lrmlab

#endif
