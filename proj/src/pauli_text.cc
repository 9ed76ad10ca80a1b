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

#include "lrmlab/pauli_text.h"

#include <charconv>

#include "lrmlab/error.h"

namespace lrmlab {
namespace {

// Strips a sign token and returns its log_i value.
uint32_t take_qubit_sign(std::string_view &text) {
    if (text.starts_with("+i")) {
        text.remove_prefix(2);
        return 1;
    }
    if (text.starts_with("-i")) {
        text.remove_prefix(2);
        return 3;
    }
    if (text.starts_with("i")) {
        text.remove_prefix(1);
        return 1;
    }
    if (text.starts_with("+")) {
        text.remove_prefix(1);
        return 0;
    }
    if (text.starts_with("-")) {
        text.remove_prefix(1);
        return 2;
    }
    return 0;
}

uint64_t parse_uint(std::string_view digits, std::string_view context) {
    uint64_t value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
        throw InvalidInput("expected an unsigned integer in '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

QubitPauli parse_qubit_pauli(std::string_view text) {
    std::string_view body = text;
    uint32_t sign = take_qubit_sign(body);
    QubitPauli result(body.size());
    for (size_t j = 0; j < body.size(); j++) {
        switch (body[j]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set(j, true, false);
                break;
            case 'Y':
                result.set(j, true, true);
                break;
            case 'Z':
                result.set(j, false, true);
                break;
            default:
                throw InvalidInput("invalid character '" + std::string(1, body[j]) + "' in Pauli string '" +
                                   std::string(text) + "'");
        }
    }
    result.set_phase(sign);
    return result;
}

PauliOperator parse_pauli(std::string_view text, const LocalConfiguration &config) {
    if (config.all_qubits()) {
        QubitPauli q = parse_qubit_pauli(text);
        if (q.num_qubits() != config.num_sites()) {
            throw InvalidInput("Pauli string '" + std::string(text) + "' has " + std::to_string(q.num_qubits()) +
                               " sites but the configuration has " + std::to_string(config.num_sites()));
        }
        std::vector<int64_t> xs(q.num_qubits()), zs(q.num_qubits());
        for (size_t j = 0; j < q.num_qubits(); j++) {
            xs[j] = q.xbit(j);
            zs[j] = q.zbit(j);
        }
        return PauliOperator(config, q.phase(), std::move(xs), std::move(zs));
    }

    std::string_view body = text;
    int64_t phase = 0;
    if (body.starts_with("p")) {
        size_t colon = body.find(':');
        if (colon == std::string_view::npos) {
            throw InvalidInput("phase prefix without ':' in '" + std::string(text) + "'");
        }
        phase = (int64_t)parse_uint(body.substr(1, colon - 1), text);
        if (phase >= config.phase_modulus()) {
            throw InvalidInput("phase exponent out of range in '" + std::string(text) + "'");
        }
        body.remove_prefix(colon + 1);
    }

    std::vector<int64_t> xs, zs;
    size_t site = 0;
    while (true) {
        size_t dot = body.find('.');
        std::string_view token = body.substr(0, dot);
        if (site >= config.num_sites()) {
            throw InvalidInput("Pauli string '" + std::string(text) + "' has more sites than the configuration " +
                               config.str());
        }
        size_t zpos = token.find('z');
        if (!token.starts_with("x") || zpos == std::string_view::npos) {
            throw InvalidInput("site token '" + std::string(token) + "' is not of the form x<a>z<b>");
        }
        uint64_t a = parse_uint(token.substr(1, zpos - 1), token);
        uint64_t b = parse_uint(token.substr(zpos + 1), token);
        if (a >= config.dim(site) || b >= config.dim(site)) {
            throw InvalidInput("exponent out of range in site token '" + std::string(token) + "' for dimension " +
                               std::to_string(config.dim(site)));
        }
        xs.push_back((int64_t)a);
        zs.push_back((int64_t)b);
        site++;
        if (dot == std::string_view::npos) {
            break;
        }
        body.remove_prefix(dot + 1);
    }
    if (site != config.num_sites()) {
        throw InvalidInput("Pauli string '" + std::string(text) + "' has " + std::to_string(site) +
                           " sites but the configuration has " + std::to_string(config.num_sites()));
    }
    return PauliOperator(config, phase, std::move(xs), std::move(zs));
}

std::string render_pauli(const QubitPauli &p) {
    static const char *const kSigns[4] = {"", "+i", "-", "-i"};
    std::string out = kSigns[p.phase()];
    out.reserve(out.size() + p.num_qubits());
    for (size_t j = 0; j < p.num_qubits(); j++) {
        out.push_back("IXZY"[p.xbit(j) + 2 * p.zbit(j)]);
    }
    return out;
}

std::string render_pauli(const PauliOperator &p) {
    if (p.config().all_qubits()) {
        return render_pauli(p.to_qubit());
    }
    std::string out;
    if (p.phase() != 0) {
        out += "p" + std::to_string(p.phase()) + ":";
    }
    for (size_t j = 0; j < p.num_sites(); j++) {
        if (j) {
            out += ".";
        }
        out += "x" + std::to_string(p.x(j)) + "z" + std::to_string(p.z(j));
    }
    return out;
}

}  // namespace lrmlab
