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

#ifndef LRMLAB_EPR_REGION_H
#define LRMLAB_EPR_REGION_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrmlab::epr {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "3/4", "-0.125", "1e-3" or an integer, parsed exactly.
Rational parse_rational(std::string_view text);
double to_double(const Rational &r);

/// b = <P x P>, c = <P x I> = <I x P>. The Pauli label is informational;
/// the region does not depend on it.
struct CorrelationPoint {
    Rational b;
    Rational c;
    std::string pauli = "Z";
};

struct Violation {
    /// "c1", "c2" or "c3".
    std::string constraint;
    std::optional<uint64_t> l;
    Rational lhs;
    Rational rhs;
};

/// Diagonals of the POVM elements E and F on the K-qubit half.
struct PovmWitness {
    std::vector<double> e;
    std::vector<double> f;
};

struct FeasibilityCertificate {
    int K = 0;
    bool feasible = false;
    /// floor((1+c)/2 * 2^K), clamped to 2^K - 1: the only c3 constraint that
    /// can bind.
    uint64_t binding_l = 0;
    std::optional<Violation> violated;
    std::optional<PovmWitness> witness;
};

inline constexpr int kMaxK = 62;

/// Exact membership test for the K-pair region. Only the binding quadratic
/// constraint is evaluated.
FeasibilityCertificate feasible(const CorrelationPoint &point, int K, bool with_witness = false);

/// Same answer, evaluating every one of the 2^K quadratic constraints.
bool feasible_all_constraints(const CorrelationPoint &point, int K);

std::optional<int> min_epr(const CorrelationPoint &point, int k_max);

/// Diagonal E, F meeting the trace targets. Throws InvalidInput when the
/// point is infeasible.
PovmWitness construct_povm(const CorrelationPoint &point, int K);

struct WitnessError {
    double trace_e = 0;
    double trace_f = 0;
    double overlap = 0;
    bool in_range = true;
};
/// Absolute deviations of a witness from its targets.
WitnessError check_witness(const CorrelationPoint &point, int K, const PovmWitness &w);

/// C^{n-1}Z |+^n>, P = X: (1 - 2^{2-n}, 1 - 2^{2-n}).
CorrelationPoint cnz_point(unsigned n);
/// sqrt(1-alpha)|0^n> + sqrt(alpha) e^{i theta}|1^n>, P = Z: (1, 1 - 2 alpha).
CorrelationPoint ghz_point(const Rational &alpha);

/// <X x X>, <X x I>, <I x X> of the reduced state on qubits 0 and 1 of the
/// dense C^{n-1}Z |+^n> statevector.
struct DenseMoments {
    double xx = 0;
    double xi = 0;
    double ix = 0;
};
DenseMoments cnz_dense_moments(unsigned n);

struct DiagnosisRow {
    int K = 0;
    /// Smallest family parameter with an infeasible point (n for cnz).
    std::optional<uint64_t> minimal_parameter;
    bool infeasible = false;
};

struct DiagnosisTable {
    std::string family;
    std::vector<DiagnosisRow> rows;
    bool lrm_certified = false;
};

/// family: "cnz" or "ghz:<alpha>".
DiagnosisTable diagnose_family(std::string_view family, int k_max);

struct BoundaryPoint {
    double b = 0;
    double c = 0;
    std::string binding;
};

/// Closed boundary polyline: the upper curve from c = -1 to c = 1, then the
/// lower curve back to c = -1.
std::vector<BoundaryPoint> region_boundary(int K, size_t samples);

/// Any N-qubit bipartite stabilizer mixed state needs at most N EPR pairs.
uint64_t epr_cost_upper_bound(uint64_t n_qubits);

std::string to_json(const FeasibilityCertificate &cert);
std::string to_json(const DiagnosisTable &table);
std::string boundary_csv(int K, const std::vector<BoundaryPoint> &points);

}  // namespace lrmlab::epr

#endif
