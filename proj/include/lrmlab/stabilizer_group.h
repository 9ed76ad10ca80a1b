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

#ifndef LRMLAB_STABILIZER_GROUP_H
#define LRMLAB_STABILIZER_GROUP_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrmlab/pauli_operator.h"
#include "lrmlab/qubit_pauli.h"

namespace lrmlab {

using BigInt = boost::multiprecision::cpp_int;

/// Row-major packed x/z bit rows, laid out for the batch parity kernel.
class PackedRows {
   public:
    PackedRows() = default;
    PackedRows(size_t num_qubits, std::span<const QubitPauli> rows);

    size_t num_rows() const {
        return num_rows_;
    }
    size_t words() const {
        return words_;
    }
    const uint64_t *row_x(size_t r) const {
        return xs_.data() + r * words_;
    }
    const uint64_t *row_z(size_t r) const {
        return zs_.data() + r * words_;
    }

    /// out[r] = 1 iff row r anticommutes with p. `out` must hold num_rows() bytes.
    void parities(const QubitPauli &p, uint8_t *out) const;
    bool commutes_with_all(const QubitPauli &p) const;

   private:
    size_t num_rows_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// Reduced row echelon form over GF(2) of a qubit stabilizer group, with
/// the exact phase of every row obtained by multiplying out the row
/// operations. Columns are ordered x_0..x_{n-1}, z_0..z_{n-1}.
class QubitCanonicalForm {
   public:
    QubitCanonicalForm() = default;
    explicit QubitCanonicalForm(size_t num_qubits) : num_qubits_(num_qubits) {
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t rank() const {
        return rows_.size();
    }
    const std::vector<QubitPauli> &rows() const {
        return rows_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

    /// Multiplies p on the right by the rows whose pivots it hits. The result
    /// has no bits on pivot columns; it is phase * I exactly when p lies in
    /// the group up to that phase.
    QubitPauli reduce(QubitPauli p) const;

    /// Inserts an element. Returns false if it was already spanned (after
    /// reduction), in which case `residual_phase` receives the log_i phase
    /// of the reduced identity.
    bool insert(const QubitPauli &p, uint32_t *residual_phase = nullptr);

   private:
    size_t num_qubits_ = 0;
    std::vector<QubitPauli> rows_;
    std::vector<size_t> pivots_;
};

enum class GroupViolation { kNone, kNotAbelian, kNontrivialPhase };

struct GroupDiagnostics {
    GroupViolation violation = GroupViolation::kNone;
    std::string message;
    /// The first non-commuting generator pair, for kNotAbelian.
    std::optional<std::pair<size_t, size_t>> pair;
    /// |G|; meaningful only when ok().
    BigInt order = 0;
    /// GF(2) rank of the generator set (qubit configurations only).
    std::optional<size_t> rank;

    bool ok() const {
        return violation == GroupViolation::kNone;
    }
};

/// Checks the two stabilizer-group conditions: Abelian, and no e^{i theta} I
/// with e^{i theta} != 1. Never throws for group-level problems.
GroupDiagnostics validate(const LocalConfiguration &config, std::span<const PauliOperator> generators);

/// A validated stabilizer group. Immutable; the canonical form (qubits) is
/// computed once at construction.
class StabilizerGroup {
   public:
    /// Throws InvalidInput carrying the diagnostics message when invalid.
    static StabilizerGroup create(LocalConfiguration config, std::vector<PauliOperator> generators);
    static StabilizerGroup create_qubit(size_t num_qubits, std::span<const QubitPauli> generators);

    const LocalConfiguration &config() const {
        return config_;
    }
    size_t num_sites() const {
        return config_.num_sites();
    }
    bool is_qubit() const {
        return config_.all_qubits();
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    const BigInt &order() const {
        return order_;
    }

    // Qubit-only accessors; throw Unsupported otherwise.
    const std::vector<QubitPauli> &qubit_generators() const;
    const QubitCanonicalForm &canonical() const;
    const PackedRows &packed_generators() const;
    size_t rank() const;

    bool in_normalizer(const PauliOperator &p) const;
    bool in_normalizer(const QubitPauli &p) const;

    /// If e^{i pi t / L} p lies in G for some t, returns that t (for qubits a
    /// log_i exponent). Qubit configurations only.
    std::optional<uint32_t> member_up_to_phase(const QubitPauli &p) const;
    std::optional<uint32_t> member_up_to_phase(const PauliOperator &p) const;

    /// Pattern-level membership; works for every configuration.
    bool contains_up_to_phase(const PauliOperator &p) const;

    /// <S|p|S> for the stabilizer state of a maximal qubit group: +1 if p is
    /// in G, -1 if -p is, 0 otherwise. p must be Hermitian.
    double stabilizer_state_expectation(const QubitPauli &p) const;
    double stabilizer_state_expectation(const PauliOperator &p) const;

    /// Lists every element (qubit or qudit). Throws CapExceeded above max_size.
    std::vector<PauliOperator> elements(uint64_t max_size) const;

   private:
    StabilizerGroup() = default;

    LocalConfiguration config_{std::vector<uint32_t>{}};
    std::vector<PauliOperator> generators_;
    BigInt order_ = 1;
    std::vector<QubitPauli> qubit_generators_;
    QubitCanonicalForm canonical_;
    PackedRows packed_;
};

/// Extends G to a maximal stabilizer group (|G'| = prod q_i). Qubits: at
/// each step adds the first normalizer basis vector, in reduced echelon
/// order, that lies outside the group. Qudits: adds the lexicographically
/// first commuting pattern outside the group with the smallest admissible
/// phase; requires prod q_i <= 2^14.
StabilizerGroup complete_group(const StabilizerGroup &group);

}  // namespace lrmlab

#endif
