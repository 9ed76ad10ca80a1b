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

#include <algorithm>
#include <filesystem>
#include <set>

#include <gtest/gtest.h>

#include "lrmlab/code_json.h"
#include "lrmlab/code_library.h"
#include "lrmlab/error.h"
#include "lrmlab/pauli_text.h"
#include "oracle.h"

namespace {

using namespace lrmlab;
using namespace lrmlab::codes;

std::set<size_t> support_set(const QubitPauli &p) {
    auto s = p.support();
    return {s.begin(), s.end()};
}

std::set<size_t> intersect(const std::set<size_t> &a, const std::set<size_t> &b) {
    std::set<size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
}

size_t site(Sector s, int a, int b) {
    return BivariateBicycleSpec::gross().site(s, Monomial{a, b});
}

/// GF(2) matrix of logical commutation: entry (i, j) = [X_i anticommutes with Z_j].
std::vector<std::vector<uint8_t>> commutation_table(const std::vector<QubitPauli> &xs,
                                                    const std::vector<QubitPauli> &zs) {
    std::vector<std::vector<uint8_t>> t(xs.size(), std::vector<uint8_t>(zs.size()));
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < zs.size(); ++j) t[i][j] = !xs[i].commutes(zs[j]);
    return t;
}

QubitPauli shift(const BivariateBicycleSpec &spec, const QubitPauli &p, Monomial by) {
    QubitPauli out(p.num_qubits());
    for (int sector = 0; sector < 2; ++sector)
        for (int b = 0; b < spec.m; ++b)
            for (int a = 0; a < spec.ell; ++a) {
                const auto from = spec.site(Sector(sector), {a, b});
                const auto to = spec.site(Sector(sector), spec.reduce(Monomial{a, b} * by));
                out.set(to, p.xbit(from), p.zbit(from));
            }
    return out;
}

TEST(Gross, Structure) {
    StabilizerCode gross = build_gross();
    EXPECT_EQ(gross.num_sites(), 144u);
    EXPECT_EQ(gross.group().rank(), 132u);
    EXPECT_EQ(gross.num_logical_qubits(), 12u);
    const auto &gens = gross.group().qubit_generators();
    ASSERT_EQ(gens.size(), 144u);
    for (size_t i = 0; i < gens.size(); ++i) {
        EXPECT_EQ(gens[i].weight(), 6u);
        for (size_t j = i + 1; j < gens.size(); ++j) ASSERT_TRUE(gens[i].commutes(gens[j])) << i << "," << j;
    }
}

TEST(Gross, LogicalTables) {
    const auto spec = BivariateBicycleSpec::gross();
    const auto raw_x = bb_logical_x(spec);
    const auto raw_z = bb_logical_z(spec);
    ASSERT_EQ(raw_x.size(), 12u);
    ASSERT_EQ(raw_z.size(), 12u);
    std::vector<std::vector<uint8_t>> rows;
    for (const auto &row : commutation_table(raw_x, raw_z)) rows.push_back(row);
    EXPECT_EQ(oracle::gf2_rank(rows), 12u);

    StabilizerCode gross = build_gross();
    const auto t = commutation_table(gross.qubit_logical_x(), gross.qubit_logical_z());
    for (size_t i = 0; i < 12; ++i)
        for (size_t j = 0; j < 12; ++j) EXPECT_EQ(t[i][j], i == j) << i << "," << j;
    for (size_t i = 0; i < 12; ++i) {
        EXPECT_EQ(gross.qubit_logical_x()[i], raw_x[i]);
        EXPECT_EQ(raw_x[i].weight(), 12u);
        for (size_t j = 0; j < 12; ++j) {
            EXPECT_TRUE(gross.qubit_logical_x()[i].commutes(gross.qubit_logical_x()[j]));
            EXPECT_TRUE(gross.qubit_logical_z()[i].commutes(gross.qubit_logical_z()[j]));
        }
        EXPECT_TRUE(gross.group().in_normalizer(raw_z[i]));
        EXPECT_FALSE(gross.group().member_up_to_phase(raw_z[i]).has_value());
    }
}

TEST(Gross, FirstLogicalSupport) {
    StabilizerCode gross = build_gross();
    const std::set<size_t> expected = {
        site(Sector::kL, 4, 0), site(Sector::kL, 4, 2), site(Sector::kL, 5, 0), site(Sector::kL, 5, 4),
        site(Sector::kL, 6, 1), site(Sector::kL, 6, 5), site(Sector::kR, 3, 0), site(Sector::kR, 3, 1),
        site(Sector::kR, 3, 2), site(Sector::kR, 3, 5), site(Sector::kR, 4, 0), site(Sector::kR, 4, 2)};
    EXPECT_EQ(support_set(gross.qubit_logical_x()[0]), expected);
    const auto &x1 = gross.qubit_logical_x()[0];
    for (size_t q : expected) EXPECT_TRUE(x1.xbit(q) && !x1.zbit(q));
}

TEST(Gross, SeventhLogicalSupport) {
    StabilizerCode gross = build_gross();
    const std::set<size_t> expected = {
        site(Sector::kL, 0, 0), site(Sector::kL, 8, 0), site(Sector::kL, 1, 1),  site(Sector::kL, 9, 1),
        site(Sector::kL, 3, 4), site(Sector::kL, 11, 4), site(Sector::kR, 1, 0), site(Sector::kR, 9, 0),
        site(Sector::kR, 4, 4), site(Sector::kR, 8, 4),  site(Sector::kR, 0, 5), site(Sector::kR, 8, 5)};
    EXPECT_EQ(support_set(gross.qubit_logical_x()[6]), expected);
}

TEST(Gross, HighlightedChecksOverlapOnTwoQubits) {
    const auto spec = BivariateBicycleSpec::gross();
    const auto x = x_check(spec, {5, 4});
    const auto z = z_check(spec, {7, 0});
    EXPECT_EQ(intersect(support_set(x), support_set(z)),
              (std::set<size_t>{site(Sector::kL, 8, 3), site(Sector::kR, 4, 1)}));
    EXPECT_TRUE(x.commutes(z));
    // x^5 y^4 A = x^5 y^4 + x^5 y^5 + x^8 y^3 on the L sector.
    std::set<size_t> left;
    for (size_t q : support_set(x))
        if (q < 72) left.insert(q);
    EXPECT_EQ(left, (std::set<size_t>{site(Sector::kL, 5, 4), site(Sector::kL, 5, 5), site(Sector::kL, 8, 3)}));
}

TEST(Gross, SingleOverlapChecksForFirstLogical) {
    const auto spec = BivariateBicycleSpec::gross();
    const auto x1 = support_set(bb_logical_x(spec)[0]);
    struct Pair {
        Sector sector;
        Monomial q;
        Monomial gamma;
    };
    const std::vector<Pair> pairs = {
        {Sector::kL, {4, 0}, {1, 1}}, {Sector::kL, {4, 2}, {1, 3}}, {Sector::kL, {5, 0}, {5, 0}},
        {Sector::kL, {5, 4}, {5, 4}}, {Sector::kL, {6, 1}, {6, 1}}, {Sector::kL, {6, 5}, {6, 5}},
        {Sector::kR, {3, 0}, {2, 0}}, {Sector::kR, {3, 1}, {3, 1}}, {Sector::kR, {3, 2}, {2, 2}},
        {Sector::kR, {3, 5}, {3, 5}}};
    for (const auto &p : pairs) {
        const auto overlap = intersect(support_set(x_check(spec, p.gamma)), x1);
        EXPECT_EQ(overlap, (std::set<size_t>{spec.site(p.sector, p.q)}))
            << "gamma = x^" << p.gamma.a << " y^" << p.gamma.b;
    }
    const std::set<size_t> remaining = {site(Sector::kR, 4, 0), site(Sector::kR, 4, 2)};
    EXPECT_EQ(intersect(support_set(x_check(spec, {4, 0})), remaining), (std::set<size_t>{site(Sector::kR, 4, 0)}));
    EXPECT_EQ(intersect(support_set(x_check(spec, {4, 2})), remaining), (std::set<size_t>{site(Sector::kR, 4, 2)}));
}

TEST(Gross, SeventhLogicalEliminationSets) {
    const auto spec = BivariateBicycleSpec::gross();
    const auto x7 = support_set(bb_logical_x(spec)[6]);
    std::set<size_t> right, left;
    for (size_t q : x7) (q >= 72 ? right : left).insert(q);

    // Each check in the first family meets the R part of the support in one
    // qubit, and together they cover it.
    std::set<size_t> covered;
    for (Monomial g : {Monomial{2, 3}, {4, 4}, {7, 5}, {8, 4}, {10, 3}, {11, 5}}) {
        const auto hit = intersect(support_set(x_check(spec, g)), right);
        ASSERT_EQ(hit.size(), 1u);
        covered.insert(*hit.begin());
    }
    EXPECT_EQ(covered, right);

    // With the R part excluded, the second family restricted to the L part
    // has full GF(2) rank, so only the trivial Z part survives.
    std::vector<size_t> left_sites(left.begin(), left.end());
    std::vector<std::vector<uint8_t>> rows;
    for (Monomial g : {Monomial{0, 0}, {8, 0}, {1, 1}, {9, 1}, {3, 4}, {11, 4}}) {
        const auto hit = intersect(support_set(x_check(spec, g)), left);
        std::vector<uint8_t> row(left_sites.size());
        for (size_t i = 0; i < left_sites.size(); ++i) row[i] = hit.count(left_sites[i]);
        rows.push_back(row);
    }
    EXPECT_EQ(oracle::gf2_rank(rows), 6u);
}

TEST(Gross, TranslationPermutesChecks) {
    const auto spec = BivariateBicycleSpec::gross();
    StabilizerCode gross = build_gross();
    std::set<std::string> checks;
    for (const auto &g : gross.group().qubit_generators()) checks.insert(render_pauli(g));
    for (Monomial by : {Monomial{1, 0}, {0, 1}, {5, 3}, {11, 5}}) {
        std::set<std::string> shifted;
        for (const auto &g : gross.group().qubit_generators()) shifted.insert(render_pauli(shift(spec, g, by)));
        EXPECT_EQ(shifted, checks);
    }
    for (int i = 0; i < 6; ++i) {
        EXPECT_EQ(shift(spec, bb_logical_x(spec)[0], spec.alpha[i]), bb_logical_x(spec)[i]);
    }
}

TEST(Toric, Parameters) {
    for (size_t L : {2u, 3u, 4u}) {
        StabilizerCode c = build_toric2d(L);
        EXPECT_EQ(c.num_sites(), 2 * L * L);
        EXPECT_EQ(c.num_logical_qubits(), 2u);
        for (const auto &x : c.qubit_logical_x()) EXPECT_EQ(x.weight(), L);
    }
    for (size_t L : {2u, 3u}) {
        StabilizerCode c = build_toric3d(L);
        EXPECT_EQ(c.num_sites(), 3 * L * L * L);
        EXPECT_EQ(c.num_logical_qubits(), 3u);
        for (const auto &x : c.qubit_logical_x()) {
            EXPECT_EQ(x.weight(), L * L);
            EXPECT_TRUE(c.group().in_normalizer(x));
        }
        for (const auto &g : c.group().qubit_generators()) {
            const size_t w = g.weight();
            EXPECT_TRUE(w == 6 || w == 4) << w;
        }
    }
    EXPECT_THROW(build_toric2d(1), InvalidInput);
    EXPECT_THROW(build_toric3d(1), InvalidInput);
}

TEST(SmallCodes, Parameters) {
    EXPECT_EQ(build_repetition(3).num_logical_qubits(), 1u);
    EXPECT_EQ(build_five_one_three().num_logical_qubits(), 1u);
    EXPECT_EQ(build_steane().num_logical_qubits(), 1u);
    EXPECT_EQ(build_named("toric2d:3").num_sites(), 18u);
    EXPECT_EQ(build_named("513").num_sites(), 5u);
    EXPECT_THROW(build_named("color:3"), InvalidInput);
}

TEST(CodeJson, GrossRoundTrip) {
    StabilizerCode gross = build_gross();
    StabilizerCode back = load_code_json(save_code_json(gross));
    ASSERT_EQ(back.group().canonical().rank(), gross.group().canonical().rank());
    for (size_t i = 0; i < gross.group().canonical().rank(); ++i)
        EXPECT_EQ(back.group().canonical().rows()[i], gross.group().canonical().rows()[i]);
    EXPECT_EQ(back.qubit_logical_x(), gross.qubit_logical_x());
    EXPECT_EQ(back.qubit_logical_z(), gross.qubit_logical_z());
    EXPECT_EQ(save_code_json(back), save_code_json(gross));
}

TEST(CodeJson, NonCommutingChecksNamePair) {
    const std::string doc =
        R"({"format":"lrm-code/1","local_dims":[2,2],"stabilizers":["ZZ","XI"],"logical_x":[],"logical_z":[],"meta":{}})";
    try {
        load_code_json(doc);
        FAIL() << "expected InvalidInput";
    } catch (const InvalidInput &e) {
        EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
    }
}

TEST(CodeJson, MixedDimensionDocument) {
    LocalConfiguration c({2, 3});
    StabilizerGroup g = StabilizerGroup::create(c, {parse_pauli(render_pauli(PauliOperator(c, 0, {0, 0}, {1, 1})), c)});
    const std::string doc = save_code_json(StabilizerCode::create(g));
    StabilizerCode back = load_code_json(doc);
    EXPECT_FALSE(back.is_qubit());
    EXPECT_EQ(back.code_dimension(), 1);
    EXPECT_THROW(back.group().qubit_generators(), Unsupported);
}

TEST(CodeJson, MalformedDocuments) {
    EXPECT_THROW(load_code_json("{"), InvalidInput);
    EXPECT_THROW(load_code_json(R"({"format":"lrm-code/1"})"), InvalidInput);
    EXPECT_THROW(load_code_json(R"({"format":"other","local_dims":[2],"stabilizers":[],"logical_x":[],"logical_z":[]})"),
                 InvalidInput);
}

TEST(CodeJson, ShippedFixturesMatchBuilders) {
    const std::filesystem::path dir = LRMLAB_FIXTURE_DIR;
    const std::vector<std::pair<std::string, std::string>> fixtures = {{"gross.json", "gross"},
                                                                       {"toric2d_3.json", "toric2d:3"},
                                                                       {"toric3d_2.json", "toric3d:2"},
                                                                       {"five_one_three.json", "five_one_three"},
                                                                       {"steane.json", "steane"}};
    for (const auto &[file, name] : fixtures) {
        StabilizerCode loaded = load_code_file(dir / file);
        StabilizerCode built = build_named(name);
        EXPECT_EQ(loaded.group().qubit_generators(), built.group().qubit_generators()) << file;
        EXPECT_EQ(loaded.qubit_logical_x(), built.qubit_logical_x()) << file;
        EXPECT_EQ(loaded.qubit_logical_z(), built.qubit_logical_z()) << file;
    }
}

}  // namespace
