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

#include "lrmlab/stabilizer_code.h"

#include <bit>

#include "lrmlab/error.h"

namespace lrmlab {

void check_logical_basis(const StabilizerGroup &group, const LogicalBasis &basis) {
    if (basis.x.size() != basis.z.size()) {
        throw InvalidInput("logical basis has " + std::to_string(basis.x.size()) + " X and " +
                           std::to_string(basis.z.size()) + " Z representatives");
    }
    size_t k = basis.size();
    auto label = [](char kind, size_t i) {
        return std::string(1, kind) + "_" + std::to_string(i + 1);
    };
    auto check_one = [&](const PauliOperator &p, char kind, size_t i) {
        if (p.config() != group.config()) {
            throw InvalidInput("logical " + label(kind, i) + " is on the wrong configuration");
        }
        if (group.is_qubit() && (p.phase() & 1)) {
            throw InvalidInput("logical " + label(kind, i) + " is not Hermitian");
        }
        if (!group.in_normalizer(p)) {
            throw InvalidInput("logical " + label(kind, i) + " does not commute with every stabilizer");
        }
        if (group.contains_up_to_phase(p)) {
            throw InvalidInput("logical " + label(kind, i) + " lies in the stabilizer group");
        }
    };
    for (size_t i = 0; i < k; i++) {
        check_one(basis.x[i], 'X', i);
        check_one(basis.z[i], 'Z', i);
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            bool commutes = commutation_phase(basis.x[i], basis.z[j]) == 0;
            if (commutes == (i == j)) {
                throw InvalidInput("logicals " + label('X', i) + " and " + label('Z', j) +
                                   (i == j ? " commute" : " do not commute"));
            }
            if (j > i && commutation_phase(basis.x[i], basis.x[j]) != 0) {
                throw InvalidInput("logicals " + label('X', i) + " and " + label('X', j) + " do not commute");
            }
            if (j > i && commutation_phase(basis.z[i], basis.z[j]) != 0) {
                throw InvalidInput("logicals " + label('Z', i) + " and " + label('Z', j) + " do not commute");
            }
        }
    }
}

StabilizerCode StabilizerCode::create(StabilizerGroup group, std::optional<LogicalBasis> logicals, std::string name) {
    StabilizerCode code(std::move(group));
    BigInt volume = 1;
    for (uint32_t q : code.group_.config().dims()) {
        volume *= q;
    }
    if (volume % code.group_.order() != 0) {
        throw InternalError("|G| = " + code.group_.order().str() + " does not divide prod q_i = " + volume.str());
    }
    code.code_dimension_ = volume / code.group_.order();
    if (logicals) {
        check_logical_basis(code.group_, *logicals);
        if (code.is_qubit() && logicals->size() != code.num_logical_qubits()) {
            throw InvalidInput("logical basis has " + std::to_string(logicals->size()) + " pairs but the code has k = " +
                               std::to_string(code.num_logical_qubits()));
        }
        if (code.is_qubit()) {
            for (const auto &p : logicals->x) {
                code.qubit_x_.push_back(p.to_qubit());
            }
            for (const auto &p : logicals->z) {
                code.qubit_z_.push_back(p.to_qubit());
            }
        }
        code.logicals_ = std::move(logicals);
    }
    code.name_ = std::move(name);
    return code;
}

size_t StabilizerCode::num_logical_qubits() const {
    return num_sites() - group_.rank();
}

const LogicalBasis &StabilizerCode::logicals() const {
    if (!logicals_) {
        throw InvalidInput("code '" + name_ + "' carries no logical basis");
    }
    return *logicals_;
}

const std::vector<QubitPauli> &StabilizerCode::qubit_logical_x() const {
    logicals();
    if (!is_qubit()) {
        throw Unsupported("packed logicals are only available for qubit codes");
    }
    return qubit_x_;
}

const std::vector<QubitPauli> &StabilizerCode::qubit_logical_z() const {
    logicals();
    if (!is_qubit()) {
        throw Unsupported("packed logicals are only available for qubit codes");
    }
    return qubit_z_;
}

QubitPauli StabilizerCode::encode_logical(const QubitPauli &q) const {
    const auto &xs = qubit_logical_x();
    const auto &zs = qubit_logical_z();
    if (q.num_qubits() != xs.size()) {
        throw InvalidInput("logical Pauli has " + std::to_string(q.num_qubits()) + " qubits, code has k = " +
                           std::to_string(xs.size()));
    }
    QubitPauli result(num_sites());
    uint32_t phase = q.phase();
    for (size_t i = 0; i < xs.size(); i++) {
        bool a = q.xbit(i), b = q.zbit(i);
        if (a) {
            result *= xs[i];
        }
        if (b) {
            result *= zs[i];
        }
        phase += (a && b) ? 1 : 0;
    }
    result.set_phase(result.phase() + phase);
    return result;
}

StabilizerCode StabilizerCode::with_name(std::string name) const {
    StabilizerCode copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

size_t brute_distance(const StabilizerCode &code) {
    if (!code.is_qubit()) {
        throw Unsupported("brute_distance is only implemented for qubit codes");
    }
    size_t n = code.num_sites();
    if (n > 16) {
        throw CapExceeded("brute_distance is limited to n <= 16 qubits (got " + std::to_string(n) + ")");
    }
    if (code.num_logical_qubits() == 0) {
        throw InvalidInput("code encodes no logical qubits; distance is undefined");
    }
    const auto &form = code.group().canonical();
    // Pattern bits: x_q at bit q, z_q at bit n + q.
    std::vector<uint32_t> rows;
    std::vector<uint32_t> pivots;
    for (size_t r = 0; r < form.rank(); r++) {
        uint32_t bits = 0;
        for (size_t q = 0; q < n; q++) {
            bits |= (uint32_t)form.rows()[r].xbit(q) << q;
            bits |= (uint32_t)form.rows()[r].zbit(q) << (n + q);
        }
        rows.push_back(bits);
        pivots.push_back(1u << form.pivots()[r]);
    }
    auto in_span = [&](uint32_t v) {
        for (size_t r = 0; r < rows.size(); r++) {
            if (v & pivots[r]) {
                v ^= rows[r];
            }
        }
        return v == 0;
    };
    // Syndrome of X_q / Z_q against row r.
    std::vector<uint32_t> syn_x(n, 0), syn_z(n, 0);
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t q = 0; q < n; q++) {
            syn_x[q] |= (uint32_t)((rows[r] >> (n + q)) & 1) << r;
            syn_z[q] |= (uint32_t)((rows[r] >> q) & 1) << r;
        }
    }
    for (size_t w = 1; w <= n; w++) {
        std::vector<size_t> sites(w);
        for (size_t i = 0; i < w; i++) {
            sites[i] = i;
        }
        while (true) {
            uint64_t total = 1;
            for (size_t i = 0; i < w; i++) {
                total *= 3;
            }
            for (uint64_t code_word = 0; code_word < total; code_word++) {
                uint64_t rest = code_word;
                uint32_t syndrome = 0, pattern = 0;
                for (size_t i = 0; i < w; i++) {
                    uint32_t kind = (uint32_t)(rest % 3) + 1;  // 1 = X, 2 = Z, 3 = Y
                    rest /= 3;
                    size_t q = sites[i];
                    if (kind & 1) {
                        syndrome ^= syn_x[q];
                        pattern |= 1u << q;
                    }
                    if (kind & 2) {
                        syndrome ^= syn_z[q];
                        pattern |= 1u << (n + q);
                    }
                }
                if (syndrome == 0 && !in_span(pattern)) {
                    return w;
                }
            }
            // Next combination.
            size_t i = w;
            while (i > 0 && sites[i - 1] == n - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            sites[i - 1]++;
            for (size_t j = i; j < w; j++) {
                sites[j] = sites[j - 1] + 1;
            }
        }
    }
    throw InternalError("no logical operator found although k > 0");
}

}  // namespace lrmlab
