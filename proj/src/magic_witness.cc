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

#include "lrmlab/magic_witness.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <set>

#include "json.hpp"
#include "lrmlab/error.h"
#include "lrmlab/parallel.h"
#include "lrmlab/pauli_text.h"

namespace lrmlab {
namespace {

using cd = std::complex<double>;

constexpr size_t kScanChunks = 64;
constexpr size_t kDenseInvarianceCap = 10;

struct Hit {
    uint64_t index;
    QubitPauli pauli;
};

std::vector<size_t> canonical_region(const std::vector<size_t> &region, size_t n) {
    if (region.empty()) throw InvalidInput("region is empty");
    std::vector<size_t> sorted = region;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("region lists a site twice");
    if (sorted.back() >= n) throw InvalidInput("region site " + std::to_string(sorted.back()) + " out of range");
    if (sorted.size() > kRegionCap)
        throw CapExceeded("region has " + std::to_string(sorted.size()) + " sites; the 3^|R| scan is capped at |R| <= " +
                          std::to_string(kRegionCap));
    return sorted;
}

/// Normalizer elements on exactly `region`. Syndromes are linear in the
/// single-site factors, so each candidate costs |R| XORs of a row bitset.
std::vector<Hit> scan_normalizer(const StabilizerGroup &group, const std::vector<size_t> &region, size_t threads) {
    const PackedRows &rows = group.packed_generators();
    const size_t n = group.num_sites();
    const size_t m = region.size();
    const size_t sw = (rows.num_rows() + 63) / 64;
    // syndrome[j][0] for X at region[j], [1] for Y, [2] for Z.
    std::vector<std::array<std::vector<uint64_t>, 3>> syndrome(m);
    for (size_t j = 0; j < m; ++j) {
        const size_t q = region[j];
        const size_t word = q >> 6, bit = q & 63;
        for (auto &s : syndrome[j]) s.assign(sw, 0);
        for (size_t r = 0; r < rows.num_rows(); ++r) {
            const bool rx = (rows.row_x(r)[word] >> bit) & 1;
            const bool rz = (rows.row_z(r)[word] >> bit) & 1;
            const uint64_t mask = uint64_t(1) << (r & 63);
            if (rz) syndrome[j][0][r >> 6] |= mask;
            if (rx) syndrome[j][2][r >> 6] |= mask;
            if (rx != rz) syndrome[j][1][r >> 6] |= mask;
        }
    }
    uint64_t total = 1;
    for (size_t j = 0; j < m; ++j) total *= 3;
    const size_t chunks = std::min<uint64_t>(kScanChunks, total);
    std::vector<std::vector<Hit>> found(chunks);
    parallel_chunks(chunks, threads == 0 ? default_thread_count() : threads, [&](size_t c) {
        const uint64_t begin = total * c / chunks, end = total * (c + 1) / chunks;
        std::vector<uint64_t> acc(sw);
        std::vector<uint8_t> digits(m);
        for (uint64_t index = begin; index < end; ++index) {
            std::fill(acc.begin(), acc.end(), 0);
            uint64_t rest = index;
            for (size_t j = 0; j < m; ++j) {
                digits[j] = rest % 3;
                rest /= 3;
                const std::vector<uint64_t> &s = syndrome[j][digits[j]];
                for (size_t w = 0; w < sw; ++w) acc[w] ^= s[w];
            }
            bool commutes = true;
            for (size_t w = 0; w < sw && commutes; ++w) commutes = acc[w] == 0;
            if (!commutes) continue;
            QubitPauli p(n);
            for (size_t j = 0; j < m; ++j) p.set(region[j], digits[j] != 2, digits[j] != 0);
            found[c].push_back({index, std::move(p)});
        }
    });
    std::vector<Hit> hits;
    for (auto &chunk : found)
        for (Hit &h : chunk) hits.push_back(std::move(h));
    return hits;
}

nlohmann::json report_json(const SpectrumReport &r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const SpectrumTerm &t : r.terms)
        witnesses.push_back({{"pauli", render_pauli(t.pauli)}, {"expectation", t.expectation}});
    return {{"region", r.region},
            {"f_value", r.f_value},
            {"nearest_integer", r.nearest_integer()},
            {"margin", r.margin()},
            {"tolerance", r.tolerance},
            {"candidates", r.candidates},
            {"verdict", verdict_name(r.verdict)},
            {"witnesses", witnesses}};
}

std::string axis_label(size_t k, uint64_t bits, char zero, char one) {
    std::string s(k, zero);
    for (size_t j = 0; j < k; ++j)
        if ((bits >> (k - 1 - j)) & 1) s[j] = one;
    return s;
}

cd dense_pauli_expectation(const Eigen::VectorXcd &psi, uint64_t xmask, uint64_t zmask) {
    cd sum = 0;
    for (uint64_t b = 0; b < (uint64_t)psi.size(); ++b) {
        cd term = std::conj(psi[b ^ xmask]) * psi[b];
        sum += (std::popcount(b & zmask) & 1) ? -term : term;
    }
    static const cd kPowI[4] = {1, cd(0, 1), -1, cd(0, -1)};
    return kPowI[std::popcount(xmask & zmask) & 3] * sum;
}

size_t qubit_count(const Eigen::VectorXcd &psi) {
    const uint64_t dim = psi.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) throw InvalidInput("statevector length must be a power of two");
    return std::countr_zero(dim);
}

void apply_single(Eigen::VectorXcd &psi, size_t n, size_t qubit, const Matrix2 &u) {
    const uint64_t stride = uint64_t(1) << (n - 1 - qubit);
    for (uint64_t b = 0; b < (uint64_t)psi.size(); ++b) {
        if (b & stride) continue;
        const cd a0 = psi[b], a1 = psi[b | stride];
        psi[b] = u(0, 0) * a0 + u(0, 1) * a1;
        psi[b | stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

}  // namespace

double logical_expectation(const StabilizerCode &code, const LogicalState &rho, const QubitPauli &p) {
    if (!code.is_qubit()) throw Unsupported("logical_expectation requires a qubit code");
    if (!code.has_logicals()) throw InvalidInput("logical_expectation requires a code with logical operators");
    if (p.num_qubits() != code.num_sites()) throw InvalidInput("Pauli size does not match the code");
    if (p.phase() != 0) throw InvalidInput("logical_expectation expects a phase-0 Hermitian Pauli");
    const StabilizerGroup &group = code.group();
    if (!group.in_normalizer(p)) return 0.0;
    const auto &xs = code.qubit_logical_x();
    const auto &zs = code.qubit_logical_z();
    QubitPauli q(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) q.set(i, !p.commutes(zs[i]), !p.commutes(xs[i]));
    QubitPauli residual = code.encode_logical(q) * p;
    std::optional<uint32_t> t = group.member_up_to_phase(residual);
    if (!t) throw InternalError("normalizer element is not a logical Pauli times a stabilizer");
    if (*t & 1) throw InternalError("logical Pauli resolution produced an imaginary phase");
    return (*t == 0 ? 1.0 : -1.0) * rho.expectation(q);
}

double logical_expectation(const StabilizerCode &code, const LogicalState &rho, const PauliOperator &p) {
    return logical_expectation(code, rho, p.to_qubit());
}

const char *verdict_name(Verdict v) {
    return v == Verdict::kCertified ? "LRM0_certified" : "inconclusive";
}

double SpectrumReport::nearest_integer() const {
    return std::round(f_value);
}

double SpectrumReport::margin() const {
    return std::abs(f_value - nearest_integer());
}

std::vector<QubitPauli> uniqueness_scan(const StabilizerGroup &group, const std::vector<size_t> &region,
                                        size_t threads) {
    if (!group.is_qubit()) throw Unsupported("uniqueness_scan requires a qubit code");
    std::vector<QubitPauli> out;
    for (Hit &h : scan_normalizer(group, canonical_region(region, group.num_sites()), threads))
        out.push_back(std::move(h.pauli));
    return out;
}

SpectrumReport f_support(const StabilizerCode &code, const LogicalState &rho, const std::vector<size_t> &region,
                         const ScanOptions &options) {
    if (!code.is_qubit()) throw Unsupported("f_support requires a qubit code");
    SpectrumReport report;
    report.region = canonical_region(region, code.num_sites());
    report.tolerance = options.tolerance;
    report.candidates = 1;
    for (size_t j = 0; j < report.region.size(); ++j) report.candidates *= 3;
    for (Hit &h : scan_normalizer(code.group(), report.region, options.threads)) {
        double e = logical_expectation(code, rho, h.pauli);
        report.terms.push_back({std::move(h.pauli), e});
    }
    for (const SpectrumTerm &t : report.terms) report.f_value += t.expectation * t.expectation;
    report.verdict = report.margin() > options.tolerance ? Verdict::kCertified : Verdict::kInconclusive;
    return report;
}

GateSpec GateSpec::parse(const std::string &name, size_t target) {
    GateSpec g;
    g.name = name;
    g.target = target;
    const cd i(0, 1);
    auto phase = [&](double theta) {
        Matrix2 m;
        m << 1, 0, 0, std::exp(i * theta);
        return m;
    };
    Matrix2 m;
    if (name == "T") m = phase(M_PI / 4);
    else if (name == "Tdg") m = phase(-M_PI / 4);
    else if (name == "sqrtT") m = phase(M_PI / 8);
    else if (name == "S") m = phase(M_PI / 2);
    else if (name == "Sdg") m = phase(-M_PI / 2);
    else if (name == "Z") m = phase(M_PI);
    else if (name == "X") m << 0, 1, 1, 0;
    else if (name == "Y") m << 0, -i, i, 0;
    else if (name == "H") m << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
    else if (name.rfind("phase:", 0) == 0) {
        size_t used = 0;
        double theta = 0;
        try {
            theta = std::stod(name.substr(6), &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != name.size() - 6) throw InvalidInput("malformed phase gate '" + name + "'");
        m = phase(theta);
    } else {
        throw InvalidInput("unknown gate '" + name + "' (T, Tdg, sqrtT, S, Sdg, H, X, Y, Z, phase:<theta>)");
    }
    g.single = m;
    return g;
}

GateSpec GateSpec::dense(std::string name, Eigen::MatrixXcd u) {
    if (u.rows() > 64) throw CapExceeded("dense gate matrices are limited to k <= 6");
    GateSpec g;
    g.name = std::move(name);
    g.full = std::move(u);
    return g;
}

LogicalState GateSpec::apply(const LogicalState &rho) const {
    return target ? rho.apply(*target, single) : rho.apply(full);
}

std::vector<std::string> default_inputs(size_t k, size_t max_inputs, uint64_t seed) {
    std::vector<std::string> out;
    if (k < 63 && (uint64_t(2) << k) <= max_inputs) {
        for (uint64_t b = 0; b < (uint64_t(1) << k); ++b) out.push_back(axis_label(k, b, '+', '-'));
        for (uint64_t b = 0; b < (uint64_t(1) << k); ++b) out.push_back(axis_label(k, b, '0', '1'));
        return out;
    }
    out.push_back(std::string(k, '+'));
    if (max_inputs > 1) out.push_back(std::string(k, '0'));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    static const char kAxis[] = "+-01";
    while (out.size() < max_inputs) {
        std::string s(k, '+');
        for (char &c : s) c = kAxis[pick(rng)];
        out.push_back(std::move(s));
    }
    return out;
}

TransversalReport transversal_report(const StabilizerCode &code, const GateSpec &gate,
                                     const TransversalOptions &options) {
    if (!code.has_logicals()) throw InvalidInput("transversal_report requires a code with logical operators");
    const size_t k = code.qubit_logical_x().size();
    if (gate.target && *gate.target >= k)
        throw InvalidInput("logical index " + std::to_string(*gate.target + 1) + " out of range 1.." +
                           std::to_string(k));
    if (!gate.target && gate.full.rows() != (Eigen::Index(1) << k))
        throw InvalidInput("dense gate size does not match 2^k");
    struct Region {
        std::string label;
        std::vector<size_t> sites;
    };
    std::vector<Region> regions;
    std::set<std::vector<size_t>> seen;
    TransversalReport report;
    report.gate = gate.name + (gate.target ? "@" + std::to_string(*gate.target + 1) : "");
    auto add = [&](const std::vector<QubitPauli> &ops, const char *prefix) {
        for (size_t i = 0; i < ops.size(); ++i) {
            std::vector<size_t> sites = ops[i].support();
            if (sites.size() > kRegionCap) {
                ++report.regions_skipped;
                continue;
            }
            if (seen.insert(sites).second) regions.push_back({"supp(" + std::string(prefix) + std::to_string(i + 1) + ")", sites});
        }
    };
    add(code.qubit_logical_x(), "X");
    add(code.qubit_logical_z(), "Z");
    std::vector<std::string> inputs =
        options.inputs.empty() ? default_inputs(k, options.max_inputs, options.seed) : options.inputs;
    for (const std::string &label : inputs) {
        LogicalState rho = gate.apply(LogicalState::parse(label));
        if (rho.num_qubits() != k) throw InvalidInput("input label '" + label + "' does not have k characters");
        ++report.inputs_tried;
        for (const Region &region : regions) {
            SpectrumReport spectrum = f_support(code, rho, region.sites, options.scan);
            ++report.regions_scanned;
            if (spectrum.verdict == Verdict::kCertified) {
                report.verdict = Verdict::kCertified;
                report.input = label;
                report.region_label = region.label;
                report.witness = std::move(spectrum);
                return report;
            }
        }
    }
    return report;
}

double dense_f_support(const Eigen::VectorXcd &psi, const std::vector<size_t> &region) {
    const size_t n = qubit_count(psi);
    std::vector<size_t> sites = canonical_region(region, n);
    uint64_t total = 1;
    for (size_t j = 0; j < sites.size(); ++j) total *= 3;
    double f = 0;
    for (uint64_t index = 0; index < total; ++index) {
        uint64_t xmask = 0, zmask = 0, rest = index;
        for (size_t q : sites) {
            const int digit = rest % 3;
            rest /= 3;
            const uint64_t bit = uint64_t(1) << (n - 1 - q);
            if (digit != 2) xmask |= bit;
            if (digit != 0) zmask |= bit;
        }
        const double e = dense_pauli_expectation(psi, xmask, zmask).real();
        f += e * e;
    }
    return f;
}

Matrix2 random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, M_SQRT1_2);
    Matrix2 z;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) z(r, c) = cd(normal(rng), normal(rng));
    Eigen::HouseholderQR<Matrix2> qr(z);
    Matrix2 q = qr.householderQ();
    Matrix2 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < 2; ++c) {
        const double mag = std::abs(r(c, c));
        if (mag > 0) q.col(c) *= r(c, c) / mag;
    }
    return q;
}

double invariance_check(const Eigen::VectorXcd &psi, const std::vector<size_t> &region, size_t trials,
                        uint64_t seed) {
    const size_t n = qubit_count(psi);
    if (n > kDenseInvarianceCap) throw CapExceeded("invariance_check is limited to n <= 10 qubits");
    const double base = dense_f_support(psi, region);
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (size_t t = 0; t < trials; ++t) {
        Eigen::VectorXcd phi = psi;
        for (size_t q = 0; q < n; ++q) apply_single(phi, n, q, random_unitary(rng));
        worst = std::max(worst, std::abs(dense_f_support(phi, region) - base));
    }
    return worst;
}

std::string to_json(const SpectrumReport &report) {
    return report_json(report).dump(2);
}

std::string to_json(const TransversalReport &report) {
    nlohmann::json doc = {
        {"gate", report.gate},
        {"verdict", report.verdict == Verdict::kCertified ? "no strictly transversal implementation" : "inconclusive"},
        {"inputs_tried", report.inputs_tried},
        {"regions_scanned", report.regions_scanned},
        {"regions_skipped", report.regions_skipped},
    };
    if (report.witness) {
        doc["input"] = report.input;
        doc["region_label"] = report.region_label;
        doc["witness"] = report_json(*report.witness);
    }
    return doc.dump(2);
}

}  // namespace lrmlab
