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

#include <random>

#include <gtest/gtest.h>

#include "lrmlab/code_library.h"
#include "lrmlab/dense_oracle.h"
#include "lrmlab/error.h"
#include "lrmlab/pauli_text.h"
#include "lrmlab/stabilizer_code.h"
#include "lrmlab/stabilizer_group.h"
#include "oracle.h"

namespace {

using namespace lrmlab;

std::vector<PauliOperator> parse_all(const LocalConfiguration &c, std::initializer_list<const char *> texts) {
    std::vector<PauliOperator> out;
    for (const char *t : texts) out.push_back(parse_pauli(t, c));
    return out;
}

StabilizerGroup bell() {
    auto c = LocalConfiguration::qubits(2);
    return StabilizerGroup::create(c, parse_all(c, {"ZZ", "XX"}));
}

oracle::Mat product_projector(const StabilizerGroup &g) {
    const auto dim = g.config().total_dimension();
    oracle::Mat pi = oracle::Mat::Identity(dim, dim);
    for (const auto &gen : g.qubit_generators()) pi = pi * (oracle::Mat::Identity(dim, dim) + oracle::matrix(gen)) / 2.0;
    return pi;
}

TEST(Validate, Examples) {
    auto c2 = LocalConfiguration::qubits(2);
    GroupDiagnostics ok = validate(c2, parse_all(c2, {"ZZ", "XX"}));
    EXPECT_TRUE(ok.ok());
    EXPECT_EQ(ok.order, 4);
    auto c1 = LocalConfiguration::qubits(1);
    GroupDiagnostics minus = validate(c1, parse_all(c1, {"Z", "-Z"}));
    EXPECT_EQ(minus.violation, GroupViolation::kNontrivialPhase);
    GroupDiagnostics nonabelian = validate(c1, parse_all(c1, {"X", "Z"}));
    EXPECT_EQ(nonabelian.violation, GroupViolation::kNotAbelian);
    ASSERT_TRUE(nonabelian.pair.has_value());
    EXPECT_EQ(*nonabelian.pair, (std::pair<size_t, size_t>{0, 1}));
    EXPECT_THROW(StabilizerGroup::create(c1, parse_all(c1, {"X", "Z"})), InvalidInput);
}

TEST(Validate, QuditPhases) {
    LocalConfiguration c({3});
    // Z^(3) has order 3 with trivial phase; e^{i pi/3} Z does not.
    EXPECT_TRUE(validate(c, std::vector<PauliOperator>{PauliOperator(c, 0, {0}, {1})}).ok());
    EXPECT_EQ(validate(c, std::vector<PauliOperator>{PauliOperator(c, 1, {0}, {1})}).violation, GroupViolation::kNontrivialPhase);
    LocalConfiguration c23({2, 3});
    auto d = validate(c23, std::vector<PauliOperator>{PauliOperator(c23, 0, {0, 0}, {1, 1})});
    EXPECT_TRUE(d.ok());
    EXPECT_EQ(d.order, 6);
}

TEST(Membership, BellExamples) {
    StabilizerGroup g = bell();
    auto yy = g.member_up_to_phase(parse_qubit_pauli("YY"));
    ASSERT_TRUE(yy.has_value());
    EXPECT_EQ(*yy, 2u);
    // Dense check: (XX)(ZZ) = -YY.
    EXPECT_LT(oracle::max_abs_diff(oracle::matrix(parse_qubit_pauli("XX")) * oracle::matrix(parse_qubit_pauli("ZZ")),
                                   -oracle::matrix(parse_qubit_pauli("YY"))),
              1e-12);
    EXPECT_FALSE(g.member_up_to_phase(parse_qubit_pauli("XI")).has_value());
    for (const auto &gen : g.qubit_generators()) EXPECT_EQ(g.member_up_to_phase(gen), 0u);
    EXPECT_DOUBLE_EQ(g.stabilizer_state_expectation(parse_qubit_pauli("YY")), -1.0);
}

TEST(Membership, AgreesWithDenseSearch) {
    std::mt19937_64 rng(21);
    for (size_t n = 1; n <= 5; ++n) {
        auto c = LocalConfiguration::qubits(n);
        for (int trial = 0; trial < 8; ++trial) {
            StabilizerGroup g = oracle::random_group(c, rng, 2 * (int)n);
            std::vector<oracle::Mat> elements;
            for (const auto &e : g.elements(1 << 12)) elements.push_back(oracle::matrix(e));
            for (int k = 0; k < 40; ++k) {
                QubitPauli p = oracle::random_qubit_pauli(n, rng, false);
                std::optional<uint32_t> expected;
                for (uint32_t t = 0; t < 4 && !expected; ++t) {
                    QubitPauli q = p;
                    q.set_phase(t);
                    const oracle::Mat m = oracle::matrix(q);
                    for (const auto &e : elements)
                        if (oracle::max_abs_diff(m, e) < 1e-9) expected = t;
                }
                EXPECT_EQ(g.member_up_to_phase(p), expected);
            }
        }
    }
}

TEST(Normalizer, ToricExamples) {
    StabilizerCode toric = codes::build_toric2d(3);
    EXPECT_TRUE(toric.group().in_normalizer(toric.qubit_logical_x()[0]));
    QubitPauli single(toric.num_sites());
    single.set(0, true, false);
    EXPECT_FALSE(toric.group().in_normalizer(single));
    for (const auto &g : toric.group().qubit_generators()) EXPECT_TRUE(toric.group().in_normalizer(g));
}

TEST(StateExpectation, Examples) {
    auto c = LocalConfiguration::qubits(2);
    StabilizerGroup zero = StabilizerGroup::create(c, parse_all(c, {"ZI", "IZ"}));
    EXPECT_DOUBLE_EQ(zero.stabilizer_state_expectation(parse_qubit_pauli("ZZ")), 1.0);
    EXPECT_DOUBLE_EQ(zero.stabilizer_state_expectation(parse_qubit_pauli("XX")), 0.0);
    StabilizerGroup partial = StabilizerGroup::create(c, parse_all(c, {"ZZ"}));
    EXPECT_THROW(partial.stabilizer_state_expectation(parse_qubit_pauli("ZZ")), InvalidInput);
}

TEST(StateExpectation, AgreesWithDenseProjector) {
    std::mt19937_64 rng(22);
    for (size_t n = 1; n <= 6; ++n) {
        auto c = LocalConfiguration::qubits(n);
        for (int trial = 0; trial < 4; ++trial) {
            StabilizerGroup g = complete_group(oracle::random_group(c, rng, (int)n));
            ASSERT_EQ(g.rank(), n);
            const oracle::Mat pi = product_projector(g);
            for (int k = 0; k < 60; ++k) {
                QubitPauli p = oracle::random_qubit_pauli(n, rng, false);
                const double expected = (pi * oracle::matrix(p)).trace().real();
                EXPECT_NEAR(g.stabilizer_state_expectation(p), expected, 1e-10);
            }
        }
    }
}

TEST(Projector, RandomGroupsQubitAndQudit) {
    std::mt19937_64 rng(23);
    const std::vector<std::vector<uint32_t>> configs = {{2, 2}, {2, 2, 2}, {3, 3}, {2, 3}, {4, 2}, {3, 2, 2}, {5, 2}};
    int count = 0;
    for (int round = 0; count < 50; ++round) {
        LocalConfiguration c(configs[round % configs.size()]);
        StabilizerGroup g = oracle::random_group(c, rng, 3);
        const dense::Matrix pi = dense::codespace_projector(g);
        EXPECT_LT((pi * pi - pi).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((pi - pi.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        const double expected = double(c.total_dimension()) / g.order().convert_to<double>();
        EXPECT_NEAR(pi.trace().real(), expected, 1e-10);
        StabilizerCode code = StabilizerCode::create(g);
        EXPECT_EQ(code.code_dimension().convert_to<double>(), expected);
        ++count;
    }
}

TEST(Projector, BellIsRankOne) {
    const dense::Matrix pi = dense::codespace_projector(bell());
    dense::Matrix expected = dense::Matrix::Zero(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
    EXPECT_LT((pi - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Projector, CapEnforced) {
    StabilizerCode gross = codes::build_gross();
    EXPECT_THROW(dense::codespace_projector(gross.group()), CapExceeded);
}

TEST(Completion, Examples) {
    auto c = LocalConfiguration::qubits(2);
    StabilizerGroup g = complete_group(StabilizerGroup::create(c, parse_all(c, {"ZZ"})));
    EXPECT_EQ(g.order(), 4);
    EXPECT_TRUE(g.member_up_to_phase(parse_qubit_pauli("ZZ")).has_value());
    LocalConfiguration qutrit({3});
    StabilizerGroup q = complete_group(StabilizerGroup::create(qutrit, {}));
    EXPECT_EQ(q.order(), 3);
}

TEST(Completion, RandomGroupsAreMaximalAndValid) {
    std::mt19937_64 rng(24);
    const std::vector<std::vector<uint32_t>> configs = {{2, 2, 2}, {3, 3}, {2, 3}, {4}, {2, 2, 3}, {6}};
    for (int round = 0; round < 30; ++round) {
        LocalConfiguration c(configs[round % configs.size()]);
        StabilizerGroup g = oracle::random_group(c, rng, 2);
        StabilizerGroup full = complete_group(g);
        EXPECT_TRUE(validate(c, full.generators()).ok());
        EXPECT_EQ(full.order(), BigInt(c.total_dimension()));
        for (const auto &gen : g.generators()) EXPECT_TRUE(full.contains_up_to_phase(gen));
    }
}

TEST(Completion, GrossAddsLogicalRepresentatives) {
    StabilizerCode gross = codes::build_gross();
    StabilizerGroup full = complete_group(gross.group());
    EXPECT_EQ(full.order(), BigInt(1) << 144);
    EXPECT_EQ(full.rank(), 144u);
    const auto &gens = full.qubit_generators();
    ASSERT_EQ(gens.size(), gross.group().qubit_generators().size() + 12);
    for (size_t i = gross.group().qubit_generators().size(); i < gens.size(); ++i) {
        EXPECT_TRUE(gross.group().in_normalizer(gens[i]));
        EXPECT_FALSE(gross.group().member_up_to_phase(gens[i]).has_value());
    }
}

TEST(Distance, SmallCodesMatchOracle) {
    struct Case {
        StabilizerCode code;
        size_t expected;
    };
    std::vector<Case> cases = {{codes::build_five_one_three(), 3},
                               {codes::build_steane(), 3},
                               {codes::build_toric2d(2), 2},
                               {codes::build_repetition(3), 1}};
    for (const auto &c : cases) {
        EXPECT_EQ(brute_distance(c.code), c.expected) << c.code.name();
        EXPECT_EQ(oracle::distance(c.code.num_sites(), c.code.group().qubit_generators()), c.expected)
            << c.code.name();
    }
    EXPECT_THROW(brute_distance(codes::build_toric2d(3)), CapExceeded);
}

TEST(Encode, DenseEncodingMatchesLogicalAction) {
    StabilizerCode code = codes::build_five_one_three();
    dense::Matrix rho(2, 2);
    rho << 0.5, 0.5, 0.5, 0.5;  // |+><+|
    const dense::Matrix encoded = dense::encode(code, rho);
    EXPECT_NEAR(encoded.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(dense::expectation(encoded, code.logicals().x[0]).real(), 1.0, 1e-12);
    EXPECT_NEAR(dense::expectation(encoded, code.logicals().z[0]).real(), 0.0, 1e-12);
}

}  // namespace
