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

#include "lrmlab/stabilizer_group.h"

#include <algorithm>
#include <bit>
#include <map>

#include "integer_lattice.h"
#include "lrmlab/error.h"
#include "lrmlab/pauli_text.h"
#include "lrmlab/simd/bit_kernels.h"

namespace lrmlab {
namespace {

bool column_bit(const QubitPauli &p, size_t column) {
    size_t n = p.num_qubits();
    return column < n ? p.xbit(column) : p.zbit(column - n);
}

std::optional<size_t> first_column(const QubitPauli &p) {
    auto xs = p.xs();
    for (size_t w = 0; w < xs.size(); w++) {
        if (xs[w]) {
            return w * 64 + std::countr_zero(xs[w]);
        }
    }
    auto zs = p.zs();
    for (size_t w = 0; w < zs.size(); w++) {
        if (zs[w]) {
            return p.num_qubits() + w * 64 + std::countr_zero(zs[w]);
        }
    }
    return std::nullopt;
}

using PatternKey = std::vector<uint16_t>;

PatternKey pattern_key(const PauliOperator &p) {
    PatternKey key(2 * p.num_sites());
    for (size_t j = 0; j < p.num_sites(); j++) {
        key[2 * j] = (uint16_t)p.x(j);
        key[2 * j + 1] = (uint16_t)p.z(j);
    }
    return key;
}

// Breadth-first closure of an Abelian generator set; maps each pattern to
// its element. Throws CapExceeded past max_size. A pattern reached with two
// different phases is reported through `conflict`.
std::map<PatternKey, PauliOperator> enumerate_closure(
    const LocalConfiguration &config,
    std::span<const PauliOperator> generators,
    uint64_t max_size,
    bool *conflict) {
    std::map<PatternKey, PauliOperator> seen;
    PauliOperator id = PauliOperator::identity(config);
    seen.emplace(pattern_key(id), id);
    std::vector<PauliOperator> frontier{id};
    if (conflict) {
        *conflict = false;
    }
    while (!frontier.empty()) {
        std::vector<PauliOperator> next;
        for (const auto &e : frontier) {
            for (const auto &g : generators) {
                PauliOperator prod = multiply(e, g);
                auto key = pattern_key(prod);
                auto it = seen.find(key);
                if (it != seen.end()) {
                    if (it->second.phase() != prod.phase() && conflict) {
                        *conflict = true;
                    }
                    continue;
                }
                if (seen.size() >= max_size) {
                    throw CapExceeded("stabilizer group has more than " + std::to_string(max_size) + " elements");
                }
                seen.emplace(std::move(key), prod);
                next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

GroupDiagnostics not_abelian(size_t i, size_t j) {
    GroupDiagnostics d;
    d.violation = GroupViolation::kNotAbelian;
    d.pair = std::make_pair(i, j);
    d.message = "stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " do not commute";
    return d;
}

GroupDiagnostics nontrivial_phase(std::string message) {
    GroupDiagnostics d;
    d.violation = GroupViolation::kNontrivialPhase;
    d.message = std::move(message);
    return d;
}

GroupDiagnostics validate_qubit(size_t n, std::span<const QubitPauli> gens) {
    for (size_t i = 0; i < gens.size(); i++) {
        if (gens[i].phase() & 1) {
            return nontrivial_phase("stabilizer " + std::to_string(i) + " is not Hermitian: its square is -I");
        }
    }
    PackedRows packed(n, gens);
    std::vector<uint8_t> parities(gens.size());
    for (size_t i = 0; i < gens.size(); i++) {
        packed.parities(gens[i], parities.data());
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (parities[j]) {
                return not_abelian(i, j);
            }
        }
    }
    QubitCanonicalForm form(n);
    for (size_t i = 0; i < gens.size(); i++) {
        uint32_t residual = 0;
        if (!form.insert(gens[i], &residual) && residual != 0) {
            static const char *const kPhase[4] = {"", "iI", "-I", "-iI"};
            return nontrivial_phase(std::string("the group contains ") + kPhase[residual] + ": stabilizer " +
                                    std::to_string(i) + " is a phase times a product of earlier stabilizers");
        }
    }
    GroupDiagnostics d;
    d.rank = form.rank();
    d.order = BigInt(1) << form.rank();
    return d;
}

GroupDiagnostics validate_general(const LocalConfiguration &config, std::span<const PauliOperator> gens) {
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (commutation_phase(gens[i], gens[j]) != 0) {
                return not_abelian(i, j);
            }
        }
    }
    std::vector<std::vector<int64_t>> patterns;
    std::vector<uint32_t> moduli;
    for (size_t j = 0; j < config.num_sites(); j++) {
        moduli.push_back(config.dim(j));
        moduli.push_back(config.dim(j));
    }
    std::vector<uint64_t> orders;
    for (const auto &g : gens) {
        std::vector<int64_t> row;
        for (size_t j = 0; j < config.num_sites(); j++) {
            row.push_back(g.x(j));
            row.push_back(g.z(j));
        }
        patterns.push_back(std::move(row));
        orders.push_back(order(g));
    }
    auto lattice = detail::analyze_pattern_lattice(patterns, moduli);
    for (const auto &coeffs : lattice.kernel) {
        PauliOperator prod = PauliOperator::identity(config);
        for (size_t i = 0; i < coeffs.size(); i++) {
            int64_t e = coeffs[i] % (int64_t)orders[i];
            if (e < 0) {
                e += (int64_t)orders[i];
            }
            prod = multiply(prod, gens[i].pow((uint64_t)e));
        }
        if (!prod.is_identity_pattern()) {
            throw InternalError("pattern lattice kernel vector does not multiply to the identity pattern");
        }
        if (prod.phase() != 0) {
            return nontrivial_phase("the group contains a nontrivial multiple of the identity (phase exponent " +
                                    std::to_string(prod.phase()) + " of e^{i pi/" + std::to_string(config.lcm()) +
                                    "})");
        }
    }
    GroupDiagnostics d;
    d.order = lattice.image_size;
    return d;
}

}  // namespace

PackedRows::PackedRows(size_t num_qubits, std::span<const QubitPauli> rows)
    : num_rows_(rows.size()), words_((num_qubits + 63) / 64) {
    xs_.assign(num_rows_ * words_, 0);
    zs_.assign(num_rows_ * words_, 0);
    for (size_t r = 0; r < num_rows_; r++) {
        std::copy(rows[r].xs().begin(), rows[r].xs().end(), xs_.begin() + r * words_);
        std::copy(rows[r].zs().begin(), rows[r].zs().end(), zs_.begin() + r * words_);
    }
}

void PackedRows::parities(const QubitPauli &p, uint8_t *out) const {
    simd::kernels().symplectic_parities(
        xs_.data(), zs_.data(), words_, num_rows_, p.xs().data(), p.zs().data(), words_, out);
}

bool PackedRows::commutes_with_all(const QubitPauli &p) const {
    const auto &k = simd::kernels();
    for (size_t r = 0; r < num_rows_; r++) {
        if (k.symplectic_parity(row_x(r), row_z(r), p.xs().data(), p.zs().data(), words_)) {
            return false;
        }
    }
    return true;
}

QubitPauli QubitCanonicalForm::reduce(QubitPauli p) const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (column_bit(p, pivots_[i])) {
            p *= rows_[i];
        }
    }
    return p;
}

bool QubitCanonicalForm::insert(const QubitPauli &p, uint32_t *residual_phase) {
    QubitPauli r = reduce(p);
    auto pivot = first_column(r);
    if (!pivot) {
        if (residual_phase) {
            *residual_phase = r.phase();
        }
        return false;
    }
    for (auto &row : rows_) {
        if (column_bit(row, *pivot)) {
            row *= r;
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, *pivot);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

GroupDiagnostics validate(const LocalConfiguration &config, std::span<const PauliOperator> generators) {
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].config() != config) {
            throw InvalidInput("stabilizer " + std::to_string(i) + " is on configuration " +
                               generators[i].config().str() + ", expected " + config.str());
        }
    }
    if (config.all_qubits()) {
        std::vector<QubitPauli> gens;
        for (const auto &g : generators) {
            gens.push_back(g.to_qubit());
        }
        return validate_qubit(config.num_sites(), gens);
    }
    return validate_general(config, generators);
}

StabilizerGroup StabilizerGroup::create(LocalConfiguration config, std::vector<PauliOperator> generators) {
    GroupDiagnostics d = validate(config, generators);
    if (!d.ok()) {
        throw InvalidInput(d.message);
    }
    StabilizerGroup g;
    g.config_ = std::move(config);
    g.generators_ = std::move(generators);
    g.order_ = d.order;
    if (g.config_.all_qubits()) {
        size_t n = g.config_.num_sites();
        for (const auto &p : g.generators_) {
            g.qubit_generators_.push_back(p.to_qubit());
        }
        g.canonical_ = QubitCanonicalForm(n);
        for (const auto &p : g.qubit_generators_) {
            g.canonical_.insert(p);
        }
        g.packed_ = PackedRows(n, g.qubit_generators_);
    }
    return g;
}

StabilizerGroup StabilizerGroup::create_qubit(size_t num_qubits, std::span<const QubitPauli> generators) {
    std::vector<PauliOperator> gens;
    LocalConfiguration config = LocalConfiguration::qubits(num_qubits);
    for (const auto &g : generators) {
        if (g.num_qubits() != num_qubits) {
            throw InvalidInput("stabilizer length " + std::to_string(g.num_qubits()) + " does not match " +
                               std::to_string(num_qubits) + " qubits");
        }
        gens.push_back(PauliOperator::from_qubit(g, config));
    }
    return create(std::move(config), std::move(gens));
}

const std::vector<QubitPauli> &StabilizerGroup::qubit_generators() const {
    if (!is_qubit()) {
        throw Unsupported("qubit generators requested on configuration " + config_.str());
    }
    return qubit_generators_;
}

const QubitCanonicalForm &StabilizerGroup::canonical() const {
    if (!is_qubit()) {
        throw Unsupported("GF(2) canonical form is only available for qubit groups");
    }
    return canonical_;
}

const PackedRows &StabilizerGroup::packed_generators() const {
    if (!is_qubit()) {
        throw Unsupported("packed generators are only available for qubit groups");
    }
    return packed_;
}

size_t StabilizerGroup::rank() const {
    return canonical().rank();
}

bool StabilizerGroup::in_normalizer(const QubitPauli &p) const {
    if (!is_qubit() || p.num_qubits() != num_sites()) {
        throw InvalidInput("qubit Pauli does not match the group's configuration");
    }
    return packed_.commutes_with_all(p);
}

bool StabilizerGroup::in_normalizer(const PauliOperator &p) const {
    if (p.config() != config_) {
        throw InvalidInput("Pauli configuration " + p.config().str() + " does not match group " + config_.str());
    }
    if (is_qubit()) {
        return in_normalizer(p.to_qubit());
    }
    for (const auto &g : generators_) {
        if (commutation_phase(g, p) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<uint32_t> StabilizerGroup::member_up_to_phase(const QubitPauli &p) const {
    if (!is_qubit()) {
        throw Unsupported("phase-resolved membership is only implemented for qubit groups");
    }
    if (p.num_qubits() != num_sites()) {
        throw InvalidInput("qubit Pauli does not match the group's configuration");
    }
    QubitPauli r = canonical_.reduce(p);
    if (!r.is_identity_pattern()) {
        return std::nullopt;
    }
    // p * w = i^phase I with w in G, so i^{-phase} p = w^{-1} is in G.
    return (4 - r.phase()) & 3;
}

std::optional<uint32_t> StabilizerGroup::member_up_to_phase(const PauliOperator &p) const {
    if (!is_qubit()) {
        throw Unsupported("phase-resolved membership is only implemented for qubit groups");
    }
    if (p.config() != config_) {
        throw InvalidInput("Pauli configuration " + p.config().str() + " does not match group " + config_.str());
    }
    return member_up_to_phase(p.to_qubit());
}

bool StabilizerGroup::contains_up_to_phase(const PauliOperator &p) const {
    if (p.config() != config_) {
        throw InvalidInput("Pauli configuration " + p.config().str() + " does not match group " + config_.str());
    }
    if (is_qubit()) {
        return member_up_to_phase(p).has_value();
    }
    // p's pattern is in the image iff adding it leaves the image size unchanged.
    std::vector<std::vector<int64_t>> patterns;
    std::vector<uint32_t> moduli;
    for (size_t j = 0; j < num_sites(); j++) {
        moduli.push_back(config_.dim(j));
        moduli.push_back(config_.dim(j));
    }
    auto pattern_of = [&](const PauliOperator &g) {
        std::vector<int64_t> row;
        for (size_t j = 0; j < num_sites(); j++) {
            row.push_back(g.x(j));
            row.push_back(g.z(j));
        }
        return row;
    };
    for (const auto &g : generators_) {
        patterns.push_back(pattern_of(g));
    }
    patterns.push_back(pattern_of(p));
    return detail::analyze_pattern_lattice(patterns, moduli).image_size == order_;
}

double StabilizerGroup::stabilizer_state_expectation(const QubitPauli &p) const {
    if (!is_qubit()) {
        throw Unsupported("stabilizer-state expectations are only implemented for qubit groups");
    }
    if (rank() != num_sites()) {
        throw InvalidInput("group of rank " + std::to_string(rank()) + " on " + std::to_string(num_sites()) +
                           " qubits does not define a pure stabilizer state");
    }
    if (p.phase() & 1) {
        throw InvalidInput("expectation requested for a non-Hermitian Pauli");
    }
    auto t = member_up_to_phase(p);
    if (!t) {
        return 0.0;
    }
    return *t == 0 ? 1.0 : -1.0;
}

double StabilizerGroup::stabilizer_state_expectation(const PauliOperator &p) const {
    if (p.config() != config_) {
        throw InvalidInput("Pauli configuration " + p.config().str() + " does not match group " + config_.str());
    }
    return stabilizer_state_expectation(p.to_qubit());
}

std::vector<PauliOperator> StabilizerGroup::elements(uint64_t max_size) const {
    if (order_ > max_size) {
        throw CapExceeded("stabilizer group of order " + order_.str() + " exceeds the enumeration cap of " +
                          std::to_string(max_size));
    }
    auto closure = enumerate_closure(config_, generators_, max_size, nullptr);
    std::vector<PauliOperator> out;
    out.reserve(closure.size());
    for (auto &[key, element] : closure) {
        out.push_back(element);
    }
    return out;
}

namespace {

// Basis of the symplectic complement of the canonical rows, i.e. the
// patterns of the normalizer, in reduced echelon order of free columns.
std::vector<QubitPauli> normalizer_basis(const QubitCanonicalForm &form) {
    size_t n = form.num_qubits();
    // Row u = (g_z | g_x) so that <u, v> is the symplectic product with v = (v_x | v_z).
    std::vector<QubitPauli> rows;
    for (const auto &g : form.rows()) {
        QubitPauli u(n);
        for (size_t q = 0; q < n; q++) {
            u.set(q, g.zbit(q), g.xbit(q));
        }
        rows.push_back(std::move(u));
    }
    QubitCanonicalForm echelon(n);
    for (const auto &u : rows) {
        echelon.insert(u);
    }
    std::vector<bool> is_pivot(2 * n, false);
    for (size_t c : echelon.pivots()) {
        is_pivot[c] = true;
    }
    std::vector<QubitPauli> basis;
    for (size_t f = 0; f < 2 * n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<bool> bits(2 * n, false);
        bits[f] = true;
        for (size_t r = 0; r < echelon.rank(); r++) {
            if (column_bit(echelon.rows()[r], f)) {
                bits[echelon.pivots()[r]] = true;
            }
        }
        QubitPauli v(n);
        for (size_t q = 0; q < n; q++) {
            v.set(q, bits[q], bits[n + q]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

StabilizerGroup complete_qubit(const StabilizerGroup &group) {
    size_t n = group.num_sites();
    std::vector<QubitPauli> gens = group.qubit_generators();
    QubitCanonicalForm form = group.canonical();
    while (form.rank() < n) {
        bool added = false;
        for (const auto &v : normalizer_basis(form)) {
            if (!form.reduce(v).is_identity_pattern()) {
                form.insert(v);
                gens.push_back(v);
                added = true;
                break;
            }
        }
        if (!added) {
            throw InternalError("normalizer contains no element outside a non-maximal group");
        }
    }
    return StabilizerGroup::create_qubit(n, gens);
}

StabilizerGroup complete_general(const StabilizerGroup &group) {
    const LocalConfiguration &config = group.config();
    uint64_t dim = config.total_dimension();
    if (dim == 0 || dim > (1u << 14)) {
        throw CapExceeded("qudit group completion requires prod q_i <= 2^14");
    }
    std::vector<PauliOperator> gens = group.generators();
    size_t n = config.num_sites();
    uint32_t modulus = config.phase_modulus();
    while (true) {
        auto closure = enumerate_closure(config, gens, dim, nullptr);
        if (closure.size() == dim) {
            break;
        }
        // Lexicographic over (a_0, b_0, a_1, b_1, ...), last entry fastest.
        std::vector<int64_t> digits(2 * n, 0);
        bool added = false;
        while (!added) {
            size_t pos = 2 * n;
            while (pos > 0) {
                pos--;
                if (++digits[pos] < (int64_t)config.dim(pos / 2)) {
                    break;
                }
                digits[pos] = 0;
                if (pos == 0) {
                    throw InternalError("no admissible extension found for a non-maximal qudit group");
                }
            }
            std::vector<int64_t> xs(n), zs(n);
            for (size_t j = 0; j < n; j++) {
                xs[j] = digits[2 * j];
                zs[j] = digits[2 * j + 1];
            }
            PauliOperator candidate(config, 0, xs, zs);
            if (closure.count(pattern_key(candidate))) {
                continue;
            }
            bool commutes = true;
            for (const auto &g : gens) {
                commutes &= commutation_phase(g, candidate) == 0;
            }
            if (!commutes) {
                continue;
            }
            PauliOperator power = candidate;
            uint64_t r = 1;
            while (!closure.count(pattern_key(power))) {
                power = multiply(power, candidate);
                r++;
            }
            uint32_t target = closure.at(pattern_key(power)).phase();
            for (uint32_t k = 0; k < modulus; k++) {
                if ((k * r + power.phase()) % modulus == target) {
                    gens.push_back(candidate.with_phase(k));
                    added = true;
                    break;
                }
            }
        }
    }
    return StabilizerGroup::create(config, std::move(gens));
}

}  // namespace

StabilizerGroup complete_group(const StabilizerGroup &group) {
    if (group.is_qubit()) {
        return complete_qubit(group);
    }
    return complete_general(group);
}

}  // namespace lrmlab
