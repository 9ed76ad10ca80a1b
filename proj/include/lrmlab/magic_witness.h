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

#ifndef LRMLAB_MAGIC_WITNESS_H
#define LRMLAB_MAGIC_WITNESS_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrmlab/logical_state.h"
#include "lrmlab/stabilizer_code.h"

namespace lrmlab {

/// <psi|p|psi> for the encoded state of `rho`, computed from the stabilizer
/// tableau without dense n-qubit arithmetic. p must be Hermitian.
double logical_expectation(const StabilizerCode &code, const LogicalState &rho, const QubitPauli &p);
double logical_expectation(const StabilizerCode &code, const LogicalState &rho, const PauliOperator &p);

enum class Verdict { kCertified, kInconclusive };
const char *verdict_name(Verdict v);

struct SpectrumTerm {
    QubitPauli pauli;
    double expectation = 0;
};

struct SpectrumReport {
    std::vector<size_t> region;
    double f_value = 0;
    double tolerance = 0;
    /// Every normalizer element supported exactly on the region, in
    /// enumeration order.
    std::vector<SpectrumTerm> terms;
    uint64_t candidates = 0;
    Verdict verdict = Verdict::kInconclusive;

    double nearest_integer() const;
    double margin() const;
};

struct ScanOptions {
    double tolerance = 1e-6;
    /// 0 selects default_thread_count().
    size_t threads = 0;
};

inline constexpr size_t kRegionCap = 16;

/// Normalizer elements P with supp(P) = region, phase 0, in enumeration
/// order (site digits X, Y, Z; first region site least significant).
std::vector<QubitPauli> uniqueness_scan(const StabilizerGroup &group, const std::vector<size_t> &region,
                                        size_t threads = 0);

/// f(psi, R) = sum over P with supp(P) = R of <psi|P|psi>^2.
SpectrumReport f_support(const StabilizerCode &code, const LogicalState &rho, const std::vector<size_t> &region,
                         const ScanOptions &options = {});

/// A logical unitary: a single-qubit gate on one logical qubit, or a dense
/// k-qubit matrix.
struct GateSpec {
    std::string name;
    std::optional<size_t> target;
    Matrix2 single = Matrix2::Identity();
    Eigen::MatrixXcd full;

    /// T, Tdg, sqrtT, S, Sdg, H, X, Y, Z, or phase:<theta> (radians).
    static GateSpec parse(const std::string &name, size_t target);
    static GateSpec dense(std::string name, Eigen::MatrixXcd u);

    LogicalState apply(const LogicalState &rho) const;
};

struct TransversalOptions {
    ScanOptions scan;
    uint64_t seed = 1;
    size_t max_inputs = 64;
    /// Overrides the default axis-state inputs when non-empty.
    std::vector<std::string> inputs;
};

struct TransversalReport {
    Verdict verdict = Verdict::kInconclusive;
    std::string gate;
    std::string input;
    std::string region_label;
    std::optional<SpectrumReport> witness;
    size_t inputs_tried = 0;
    size_t regions_scanned = 0;
    size_t regions_skipped = 0;
};

/// Searches stabilizer inputs |S> and logical-operator supports R for a
/// non-integer f(U|S>, R). A certified verdict proves that U has no strictly
/// transversal implementation on the code.
TransversalReport transversal_report(const StabilizerCode &code, const GateSpec &gate,
                                     const TransversalOptions &options = {});

/// Default stabilizer inputs: X-basis labels then Z-basis labels, 2 * 2^k in
/// all, or |+^k>, |0^k> and seeded random axis states when that exceeds
/// max_inputs.
std::vector<std::string> default_inputs(size_t k, size_t max_inputs, uint64_t seed);

/// Dense f(psi, R) for an n-qubit statevector (qubit 0 most significant).
double dense_f_support(const Eigen::VectorXcd &psi, const std::vector<size_t> &region);

/// Haar-random 2x2 unitary.
Matrix2 random_unitary(std::mt19937_64 &rng);

/// Max |f(psi, R) - f(U psi, R)| over random product unitaries U.
double invariance_check(const Eigen::VectorXcd &psi, const std::vector<size_t> &region, size_t trials,
                        uint64_t seed);

std::string to_json(const SpectrumReport &report);
std::string to_json(const TransversalReport &report);

}  // namespace lrmlab

#endif
