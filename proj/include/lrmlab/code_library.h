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

#ifndef LRMLAB_CODE_LIBRARY_H
#define LRMLAB_CODE_LIBRARY_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lrmlab/stabilizer_code.h"

namespace lrmlab::codes {

/// x^a y^b on the ell x m torus.
struct Monomial {
    int a = 0;
    int b = 0;
    bool operator==(const Monomial &) const = default;
};

/// A GF(2) polynomial as a list of monomials; repeated monomials cancel.
using Polynomial = std::vector<Monomial>;

enum class Sector { kL = 0, kR = 1 };

/// Bivariate bicycle code data: checks gamma X(A, B) and gamma Z(B^T, A^T)
/// over all monomials gamma, plus the polynomials and translation lists
/// that define the logical basis.
struct BivariateBicycleSpec {
    int ell = 0;
    int m = 0;
    Polynomial poly_a;
    Polynomial poly_b;
    Polynomial p, q, r, s;
    Monomial mu, nu;
    std::array<Monomial, 6> alpha;
    std::array<Monomial, 6> beta;

    /// The [[144,12,12]] gross code on the 12 x 6 torus.
    static BivariateBicycleSpec gross();

    Monomial reduce(Monomial mono) const;
    /// Site index, flattened row-major over (sector, b, a).
    size_t site(Sector sector, Monomial mono) const;
    size_t num_qubits() const {
        return 2 * (size_t)ell * (size_t)m;
    }
};

Monomial operator*(Monomial lhs, Monomial rhs);
/// x -> x^{-1}, y -> y^{-1}.
Monomial transpose(Monomial mono);
Polynomial transpose(const Polynomial &poly);
Polynomial operator*(Monomial gamma, const Polynomial &poly);

/// X on L qubits indexed by `left` and R qubits indexed by `right`.
QubitPauli x_type(const BivariateBicycleSpec &spec, const Polynomial &left, const Polynomial &right);
QubitPauli z_type(const BivariateBicycleSpec &spec, const Polynomial &left, const Polynomial &right);

/// gamma X(A, B)
QubitPauli x_check(const BivariateBicycleSpec &spec, Monomial gamma);
/// gamma Z(B^T, A^T)
QubitPauli z_check(const BivariateBicycleSpec &spec, Monomial gamma);

/// Logical X_1..X_12 and Z_1..Z_12 from the translation lists, exactly as
/// listed. These generate the logical group but do not pair up canonically.
std::vector<QubitPauli> bb_logical_x(const BivariateBicycleSpec &spec);
std::vector<QubitPauli> bb_logical_z(const BivariateBicycleSpec &spec);

/// Products of the given Z representatives forming the dual basis of `xs`:
/// result j anticommutes with xs[i] iff i == j. Throws InvalidInput if the
/// commutation matrix is singular over GF(2).
std::vector<QubitPauli> symplectic_dual(const std::vector<QubitPauli> &xs, const std::vector<QubitPauli> &zs);

/// Logical X operators are kept as listed; logical Z operators are their
/// symplectic dual.
StabilizerCode build_bivariate_bicycle(const BivariateBicycleSpec &spec, std::string name);
StabilizerCode build_gross();

/// Kitaev toric code on an L x L torus: qubits on edges (n = 2L^2), X vertex
/// stars, Z plaquettes. Horizontal edge (x,y) -> y L + x, vertical edge
/// (x,y) -> L^2 + y L + x.
StabilizerCode build_toric2d(size_t L);

/// 3D toric code on the periodic cubic lattice: qubits on edges (n = 3L^3),
/// weight-6 X vertex stars, weight-4 Z face plaquettes, X logicals on
/// membranes and Z logicals on axis strings. Edge (v, d) ->
/// ((d L + v_z) L + v_y) L + v_x.
StabilizerCode build_toric3d(size_t L);

StabilizerCode build_repetition(size_t n);
StabilizerCode build_five_one_three();
StabilizerCode build_steane();

/// gross, toric2d:L, toric3d:L, repetition:n, five_one_three, steane.
StabilizerCode build_named(std::string_view name);

}  // namespace lrmlab::codes

#endif
