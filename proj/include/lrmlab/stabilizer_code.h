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

#ifndef LRMLAB_STABILIZER_CODE_H
#define LRMLAB_STABILIZER_CODE_H

#include <optional>
#include <string>
#include <vector>

#include "lrmlab/stabilizer_group.h"

namespace lrmlab {

/// Logical representatives X_1..X_k, Z_1..Z_k. They commute with the group,
/// X_i and Z_j fail to commute exactly when i == j, same-type pairs commute,
/// and none lies in the group up to phase.
struct LogicalBasis {
    std::vector<PauliOperator> x;
    std::vector<PauliOperator> z;

    size_t size() const {
        return x.size();
    }
};

/// Throws InvalidInput naming the first violated logical-basis invariant.
void check_logical_basis(const StabilizerGroup &group, const LogicalBasis &basis);

class StabilizerCode {
   public:
    /// Verifies dim C_G = prod q_i / |G| is a positive integer and, when
    /// given, the logical basis invariants.
    static StabilizerCode create(StabilizerGroup group, std::optional<LogicalBasis> logicals = std::nullopt,
                                 std::string name = "");

    const StabilizerGroup &group() const {
        return group_;
    }
    const LocalConfiguration &config() const {
        return group_.config();
    }
    size_t num_sites() const {
        return group_.num_sites();
    }
    bool is_qubit() const {
        return group_.is_qubit();
    }
    const BigInt &code_dimension() const {
        return code_dimension_;
    }
    /// n - rank for qubit codes.
    size_t num_logical_qubits() const;
    const std::string &name() const {
        return name_;
    }

    bool has_logicals() const {
        return logicals_.has_value();
    }
    const LogicalBasis &logicals() const;
    /// Packed copies of the logical representatives (qubit codes only).
    const std::vector<QubitPauli> &qubit_logical_x() const;
    const std::vector<QubitPauli> &qubit_logical_z() const;

    /// The encoded logical Pauli for a k-qubit Pauli q: the product over i of
    /// X_i^{a_i} Z_i^{b_i}, with an extra factor i per Y so that Hermitian
    /// inputs map to Hermitian outputs. Qubit codes with logicals only.
    QubitPauli encode_logical(const QubitPauli &q) const;

    StabilizerCode with_name(std::string name) const;

   private:
    StabilizerCode(StabilizerGroup group) : group_(std::move(group)) {
    }

    StabilizerGroup group_;
    BigInt code_dimension_;
    std::optional<LogicalBasis> logicals_;
    std::vector<QubitPauli> qubit_x_;
    std::vector<QubitPauli> qubit_z_;
    std::string name_;
};

/// Minimum weight of a normalizer element outside the group (up to phase),
/// by exhaustive search in order of weight. Qubit codes with n <= 16 only.
size_t brute_distance(const StabilizerCode &code);

}  // namespace lrmlab

#endif
