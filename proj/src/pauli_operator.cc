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

#include "lrmlab/pauli_operator.h"

#include "lrmlab/error.h"
#include "lrmlab/qubit_pauli.h"

namespace lrmlab {
namespace {

uint32_t reduce(int64_t v, uint32_t m) {
    int64_t r = v % (int64_t)m;
    return (uint32_t)(r < 0 ? r + m : r);
}

void require_same_config(const PauliOperator &p, const PauliOperator &q) {
    if (p.config() != q.config()) {
        throw InvalidInput("Pauli operators on different local configurations " + p.config().str() + " and " +
                           q.config().str());
    }
}

}  // namespace

PauliOperator PauliOperator::identity(LocalConfiguration config) {
    PauliOperator result(std::move(config));
    result.x_.assign(result.config_.num_sites(), 0);
    result.z_.assign(result.config_.num_sites(), 0);
    return result;
}

PauliOperator::PauliOperator(LocalConfiguration config, int64_t phase, std::vector<int64_t> x, std::vector<int64_t> z)
    : config_(std::move(config)) {
    size_t n = config_.num_sites();
    if (x.size() != n || z.size() != n) {
        throw InvalidInput("exponent vectors have length " + std::to_string(x.size()) + "/" +
                           std::to_string(z.size()) + " but the configuration has " + std::to_string(n) + " sites");
    }
    phase_ = reduce(phase, config_.phase_modulus());
    x_.resize(n);
    z_.resize(n);
    for (size_t j = 0; j < n; j++) {
        x_[j] = (uint16_t)reduce(x[j], config_.dim(j));
        z_[j] = (uint16_t)reduce(z[j], config_.dim(j));
    }
}

PauliOperator PauliOperator::with_phase(int64_t phase) const {
    PauliOperator result = *this;
    result.phase_ = reduce(phase, config_.phase_modulus());
    return result;
}

bool PauliOperator::is_identity_pattern() const {
    for (size_t j = 0; j < x_.size(); j++) {
        if (x_[j] || z_[j]) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> PauliOperator::support() const {
    std::vector<size_t> result;
    for (size_t j = 0; j < x_.size(); j++) {
        if (x_[j] || z_[j]) {
            result.push_back(j);
        }
    }
    return result;
}

size_t PauliOperator::weight() const {
    size_t w = 0;
    for (size_t j = 0; j < x_.size(); j++) {
        w += (x_[j] || z_[j]);
    }
    return w;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    require_same_config(p, q);
    const LocalConfiguration &config = p.config_;
    uint32_t l = config.lcm();
    PauliOperator result(config);
    size_t n = p.num_sites();
    result.x_.resize(n);
    result.z_.resize(n);
    int64_t phase = (int64_t)p.phase_ + q.phase_;
    for (size_t j = 0; j < n; j++) {
        int64_t dim = config.dim(j);
        int64_t a = p.x_[j], b = p.z_[j], c = q.x_[j], d = q.z_[j];
        int64_t a2 = (a + c) % dim, b2 = (b + d) % dim;
        // S(a,b) S(c,d) = e^{i pi (ab + cd + 2bc - a'b') / q} S(a',b')
        int64_t units = a * b + c * d + 2 * b * c - a2 * b2;
        phase += units * (l / dim);
        result.x_[j] = (uint16_t)a2;
        result.z_[j] = (uint16_t)b2;
    }
    result.phase_ = reduce(phase, config.phase_modulus());
    return result;
}

uint32_t commutation_phase(const PauliOperator &p, const PauliOperator &q) {
    require_same_config(p, q);
    const LocalConfiguration &config = p.config();
    uint32_t l = config.lcm();
    int64_t t = 0;
    for (size_t j = 0; j < p.num_sites(); j++) {
        int64_t dim = config.dim(j);
        int64_t a = p.x(j), b = p.z(j), c = q.x(j), d = q.z(j);
        t += 2 * ((b * c - a * d) % dim) * (l / dim);
        t %= 2 * (int64_t)l;
    }
    return reduce(t, config.phase_modulus());
}

PauliOperator PauliOperator::pow(uint64_t exponent) const {
    PauliOperator result = identity(config_);
    PauliOperator base = *this;
    while (exponent) {
        if (exponent & 1) {
            result = multiply(result, base);
        }
        exponent >>= 1;
        if (exponent) {
            base = multiply(base, base);
        }
    }
    return result;
}

PauliOperator PauliOperator::inverse() const {
    return pow(order(*this) - 1);
}

uint64_t order(const PauliOperator &p) {
    PauliOperator acc = p;
    uint64_t cap = p.config().phase_modulus();
    for (uint64_t r = 1; r <= cap; r++) {
        if (acc.is_identity()) {
            return r;
        }
        acc = multiply(acc, p);
    }
    throw InternalError("Pauli operator order exceeds 2L");
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_ && config_ == other.config_;
}

QubitPauli PauliOperator::to_qubit() const {
    if (!config_.all_qubits()) {
        throw Unsupported("configuration " + config_.str() + " is not all-qubit");
    }
    QubitPauli result(num_sites());
    for (size_t j = 0; j < num_sites(); j++) {
        result.set(j, x_[j], z_[j]);
    }
    result.set_phase(phase_);
    return result;
}

PauliOperator PauliOperator::from_qubit(const QubitPauli &p) {
    return from_qubit(p, LocalConfiguration::qubits(p.num_qubits()));
}

PauliOperator PauliOperator::from_qubit(const QubitPauli &p, const LocalConfiguration &config) {
    if (!config.all_qubits() || config.num_sites() != p.num_qubits()) {
        throw InvalidInput("configuration " + config.str() + " does not hold a " + std::to_string(p.num_qubits()) +
                           "-qubit Pauli");
    }
    PauliOperator result = identity(config);
    for (size_t j = 0; j < p.num_qubits(); j++) {
        result.x_[j] = p.xbit(j);
        result.z_[j] = p.zbit(j);
    }
    result.phase_ = p.phase();
    return result;
}

}  // namespace lrmlab
