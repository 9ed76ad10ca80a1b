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

#include "lrmlab/code_library.h"

#include <charconv>

#include "lrmlab/error.h"
#include "lrmlab/pauli_text.h"

namespace lrmlab::codes {
namespace {

int wrap(int v, int mod) {
    int r = v % mod;
    return r < 0 ? r + mod : r;
}

void toggle(QubitPauli &p, size_t q, bool x, bool z) {
    p.set(q, p.xbit(q) != x, p.zbit(q) != z);
}

QubitPauli bb_operator(const BivariateBicycleSpec &spec, const Polynomial &left, const Polynomial &right, bool x) {
    QubitPauli p(spec.num_qubits());
    for (Monomial mono : left) toggle(p, spec.site(Sector::kL, mono), x, !x);
    for (Monomial mono : right) toggle(p, spec.site(Sector::kR, mono), x, !x);
    return p;
}

std::vector<Monomial> all_monomials(const BivariateBicycleSpec &spec) {
    std::vector<Monomial> out;
    for (int b = 0; b < spec.m; ++b)
        for (int a = 0; a < spec.ell; ++a) out.push_back({a, b});
    return out;
}

PauliOperator to_general(const QubitPauli &p) {
    return PauliOperator::from_qubit(p);
}

StabilizerCode assemble(size_t n, const std::vector<QubitPauli> &stabilizers, const std::vector<QubitPauli> &lx,
                        const std::vector<QubitPauli> &lz, std::string name) {
    StabilizerGroup group = StabilizerGroup::create_qubit(n, stabilizers);
    LogicalBasis basis;
    for (const QubitPauli &p : lx) basis.x.push_back(to_general(p));
    for (const QubitPauli &p : lz) basis.z.push_back(to_general(p));
    return StabilizerCode::create(std::move(group), std::move(basis), std::move(name));
}

QubitPauli on_sites(size_t n, const std::vector<size_t> &sites, bool x) {
    QubitPauli p(n);
    for (size_t q : sites) toggle(p, q, x, !x);
    return p;
}

std::vector<QubitPauli> parse_all(std::initializer_list<const char *> texts) {
    std::vector<QubitPauli> out;
    for (const char *t : texts) out.push_back(parse_qubit_pauli(t));
    return out;
}

}  // namespace

BivariateBicycleSpec BivariateBicycleSpec::gross() {
    BivariateBicycleSpec s;
    s.ell = 12;
    s.m = 6;
    s.poly_a = {{0, 0}, {0, 1}, {3, -1}};
    s.poly_b = {{0, 0}, {1, 0}, {-1, -3}};
    s.p = {{4, 0}, {5, 0}, {6, 1}, {4, 2}, {5, 4}, {6, 5}};
    s.q = {{3, 0}, {4, 0}, {3, 1}, {3, 2}, {4, 2}, {3, 5}};
    s.r = {{0, 0}, {8, 0}, {1, 1}, {9, 1}, {3, 4}, {11, 4}};
    s.s = {{1, 0}, {9, 0}, {4, 4}, {8, 4}, {0, 5}, {8, 5}};
    s.mu = {1, 1};
    s.nu = {1, 1};
    s.alpha = {Monomial{0, 0}, {3, 5}, {11, 5}, {10, 1}, {5, 4}, {4, 2}};
    s.beta = {Monomial{0, 0}, {1, 1}, {4, 0}, {5, 4}, {4, 3}, {3, 5}};
    return s;
}

Monomial BivariateBicycleSpec::reduce(Monomial mono) const {
    return {wrap(mono.a, ell), wrap(mono.b, m)};
}

size_t BivariateBicycleSpec::site(Sector sector, Monomial mono) const {
    Monomial r = reduce(mono);
    return (size_t)sector * (size_t)ell * (size_t)m + (size_t)r.b * (size_t)ell + (size_t)r.a;
}

Monomial operator*(Monomial lhs, Monomial rhs) {
    return {lhs.a + rhs.a, lhs.b + rhs.b};
}

Monomial transpose(Monomial mono) {
    return {-mono.a, -mono.b};
}

Polynomial transpose(const Polynomial &poly) {
    Polynomial out;
    out.reserve(poly.size());
    for (Monomial m : poly) out.push_back(transpose(m));
    return out;
}

Polynomial operator*(Monomial gamma, const Polynomial &poly) {
    Polynomial out;
    out.reserve(poly.size());
    for (Monomial m : poly) out.push_back(gamma * m);
    return out;
}

QubitPauli x_type(const BivariateBicycleSpec &spec, const Polynomial &left, const Polynomial &right) {
    return bb_operator(spec, left, right, true);
}

QubitPauli z_type(const BivariateBicycleSpec &spec, const Polynomial &left, const Polynomial &right) {
    return bb_operator(spec, left, right, false);
}

QubitPauli x_check(const BivariateBicycleSpec &spec, Monomial gamma) {
    return x_type(spec, gamma * spec.poly_a, gamma * spec.poly_b);
}

QubitPauli z_check(const BivariateBicycleSpec &spec, Monomial gamma) {
    return z_type(spec, gamma * transpose(spec.poly_b), gamma * transpose(spec.poly_a));
}

std::vector<QubitPauli> bb_logical_x(const BivariateBicycleSpec &spec) {
    std::vector<QubitPauli> out;
    for (Monomial a : spec.alpha) out.push_back(x_type(spec, a * spec.p, a * spec.q));
    for (Monomial b : spec.beta) {
        Monomial bt = transpose(b);
        out.push_back(x_type(spec, bt * spec.r, bt * spec.s));
    }
    return out;
}

std::vector<QubitPauli> bb_logical_z(const BivariateBicycleSpec &spec) {
    std::vector<QubitPauli> out;
    for (Monomial b : spec.beta) {
        Monomial shift = b * spec.nu;
        out.push_back(z_type(spec, shift * transpose(spec.s), shift * transpose(spec.r)));
    }
    for (Monomial a : spec.alpha) {
        Monomial shift = transpose(a) * spec.mu;
        out.push_back(z_type(spec, shift * transpose(spec.q), shift * transpose(spec.p)));
    }
    return out;
}

std::vector<QubitPauli> symplectic_dual(const std::vector<QubitPauli> &xs, const std::vector<QubitPauli> &zs) {
    const size_t k = xs.size();
    if (zs.size() != k) throw InvalidInput("symplectic_dual: basis sizes differ");
    // Gauss-Jordan on [M | I] with M[i][j] = [xs[i] anticommutes with zs[j]].
    std::vector<std::vector<uint8_t>> aug(k, std::vector<uint8_t>(2 * k, 0));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = xs[i].commutes(zs[j]) ? 0 : 1;
        aug[i][k + i] = 1;
    }
    for (size_t col = 0; col < k; ++col) {
        size_t pivot = col;
        while (pivot < k && !aug[pivot][col]) ++pivot;
        if (pivot == k) throw InvalidInput("symplectic_dual: logical commutation matrix is singular");
        std::swap(aug[pivot], aug[col]);
        for (size_t r = 0; r < k; ++r)
            if (r != col && aug[r][col])
                for (size_t c = 0; c < 2 * k; ++c) aug[r][c] ^= aug[col][c];
    }
    // Row i of the right block is row i of M^{-1}; Z'_j = prod_k zs[k]^{Minv[k][j]}.
    std::vector<QubitPauli> out;
    for (size_t j = 0; j < k; ++j) {
        QubitPauli z(xs.empty() ? 0 : xs[0].num_qubits());
        for (size_t r = 0; r < k; ++r)
            if (aug[r][k + j]) z *= zs[r];
        out.push_back(z.hermitian_part());
    }
    return out;
}

StabilizerCode build_bivariate_bicycle(const BivariateBicycleSpec &spec, std::string name) {
    std::vector<QubitPauli> stabilizers;
    for (Monomial g : all_monomials(spec)) stabilizers.push_back(x_check(spec, g));
    for (Monomial g : all_monomials(spec)) stabilizers.push_back(z_check(spec, g));
    std::vector<QubitPauli> lx = bb_logical_x(spec);
    return assemble(spec.num_qubits(), stabilizers, lx, symplectic_dual(lx, bb_logical_z(spec)), std::move(name));
}

StabilizerCode build_gross() {
    return build_bivariate_bicycle(BivariateBicycleSpec::gross(), "gross");
}

StabilizerCode build_toric2d(size_t L) {
    if (L < 2) throw InvalidInput("toric2d needs L >= 2");
    const size_t n = 2 * L * L;
    auto h = [L](size_t x, size_t y) { return (y % L) * L + (x % L); };
    auto v = [L](size_t x, size_t y) { return L * L + (y % L) * L + (x % L); };
    std::vector<QubitPauli> stabilizers;
    for (size_t y = 0; y < L; ++y)
        for (size_t x = 0; x < L; ++x)
            stabilizers.push_back(on_sites(n, {h(x, y), h(x + L - 1, y), v(x, y), v(x, y + L - 1)}, true));
    for (size_t y = 0; y < L; ++y)
        for (size_t x = 0; x < L; ++x)
            stabilizers.push_back(on_sites(n, {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)}, false));
    std::vector<size_t> x1, z1, x2, z2;
    for (size_t t = 0; t < L; ++t) {
        x1.push_back(h(0, t));
        z1.push_back(h(t, 0));
        x2.push_back(v(t, 0));
        z2.push_back(v(0, t));
    }
    return assemble(n, stabilizers, {on_sites(n, x1, true), on_sites(n, x2, true)},
                    {on_sites(n, z1, false), on_sites(n, z2, false)}, "toric2d:" + std::to_string(L));
}

StabilizerCode build_toric3d(size_t L) {
    if (L < 2) throw InvalidInput("toric3d needs L >= 2");
    const size_t n = 3 * L * L * L;
    using V = std::array<size_t, 3>;
    auto edge = [L](V v, size_t d) { return ((d * L + v[2] % L) * L + v[1] % L) * L + v[0] % L; };
    auto step = [L](V v, size_t d, bool back) {
        v[d] = back ? (v[d] + L - 1) % L : (v[d] + 1) % L;
        return v;
    };
    std::vector<V> vertices;
    for (size_t z = 0; z < L; ++z)
        for (size_t y = 0; y < L; ++y)
            for (size_t x = 0; x < L; ++x) vertices.push_back({x, y, z});
    std::vector<QubitPauli> stabilizers;
    for (const V &v : vertices) {
        std::vector<size_t> sites;
        for (size_t d = 0; d < 3; ++d) {
            sites.push_back(edge(v, d));
            sites.push_back(edge(step(v, d, true), d));
        }
        stabilizers.push_back(on_sites(n, sites, true));
    }
    for (const V &v : vertices)
        for (size_t d1 = 0; d1 < 3; ++d1)
            for (size_t d2 = d1 + 1; d2 < 3; ++d2)
                stabilizers.push_back(on_sites(
                    n, {edge(v, d1), edge(step(v, d2, false), d1), edge(v, d2), edge(step(v, d1, false), d2)}, false));
    std::vector<QubitPauli> lx, lz;
    for (size_t d = 0; d < 3; ++d) {
        std::vector<size_t> membrane, line;
        for (const V &v : vertices)
            if (v[d] == 0) membrane.push_back(edge(v, d));
        V v{0, 0, 0};
        for (size_t t = 0; t < L; ++t) {
            line.push_back(edge(v, d));
            v = step(v, d, false);
        }
        lx.push_back(on_sites(n, membrane, true));
        lz.push_back(on_sites(n, line, false));
    }
    return assemble(n, stabilizers, lx, lz, "toric3d:" + std::to_string(L));
}

StabilizerCode build_repetition(size_t n) {
    if (n < 2) throw InvalidInput("repetition needs n >= 2");
    std::vector<QubitPauli> stabilizers;
    for (size_t i = 0; i + 1 < n; ++i) stabilizers.push_back(on_sites(n, {i, i + 1}, false));
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    return assemble(n, stabilizers, {on_sites(n, all, true)}, {on_sites(n, {0}, false)},
                    "repetition:" + std::to_string(n));
}

StabilizerCode build_five_one_three() {
    return assemble(5, parse_all({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}), parse_all({"XXXXX"}), parse_all({"ZZZZZ"}),
                    "five_one_three");
}

StabilizerCode build_steane() {
    return assemble(7, parse_all({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}),
                    parse_all({"XXXXXXX"}), parse_all({"ZZZZZZZ"}), "steane");
}

StabilizerCode build_named(std::string_view name) {
    auto colon = name.find(':');
    std::string_view head = name.substr(0, colon);
    size_t size = 0;
    if (colon != std::string_view::npos) {
        std::string_view tail = name.substr(colon + 1);
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), size);
        if (ec != std::errc() || ptr != tail.data() + tail.size())
            throw InvalidInput("bad size in code name '" + std::string(name) + "'");
    }
    auto need_size = [&]() {
        if (colon == std::string_view::npos)
            throw InvalidInput("code '" + std::string(head) + "' needs a size, e.g. " + std::string(head) + ":3");
    };
    if (head == "gross") return build_gross();
    if (head == "five_one_three" || head == "513") return build_five_one_three();
    if (head == "steane") return build_steane();
    if (head == "toric2d") return need_size(), build_toric2d(size);
    if (head == "toric3d") return need_size(), build_toric3d(size);
    if (head == "repetition") return need_size(), build_repetition(size);
    throw InvalidInput("unknown code '" + std::string(name) + "'");
}

}  // namespace lrmlab::codes
