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

#ifndef LRMLAB_GROUND_SPACE_H
#define LRMLAB_GROUND_SPACE_H

#include <string>
#include <string_view>
#include <vector>

#include "lrmlab/factorize.h"
#include "lrmlab/golden_int.h"
#include "lrmlab/local_configuration.h"

namespace lrmlab {

struct AnyonModel {
    std::string name;
    /// Quantum dimensions; the first must be 1.
    std::vector<GoldenInt> dims;

    /// Checks d_0 = 1 and d_i >= 1 numerically.
    void validate() const;

    /// Doubled Fibonacci: 1, tau, tau, 1 + tau.
    static AnyonModel fibonacci();
    /// D(S_3): 1, 1, 2, 3, 3, 2, 2, 2.
    static AnyonModel s3();
    /// Z_2 toric code: 1, 1, 1, 1.
    static AnyonModel toric();
    /// fibonacci, s3, toric, or dims:<d0>,<d1>,...
    static AnyonModel parse(std::string_view spec);
};

struct GsdVerdict {
    std::string config;
    bool strong_lrm = false;
};

struct GsdReport {
    std::string model;
    unsigned genus = 0;
    BigInt gsd;
    Factorization factors;
    std::vector<GsdVerdict> verdicts;
};

/// (sum_i d_i^2)^{g-1} sum_i d_i^{-2(g-1)}, evaluated exactly over Q(tau).
/// Throws InvalidInput when the value is not an integer.
BigInt ground_state_degeneracy(const AnyonModel &model, unsigned genus);

/// Degeneracy with its factorization; verdicts are left empty.
GsdReport gsd(const AnyonModel &model, unsigned genus);

/// 5^{g-1} L_{g-1}^2 for odd g, 5^g F_{g-1}^2 for even g.
BigInt fibonacci_gsd_closed(unsigned genus);
/// 2 * 6^{2g-2} + 4 * 3^{2g-2} + 2 * 2^{2g-2}.
BigInt s3_gsd_closed(unsigned genus);

/// True iff some prime factor of gsd does not divide prod_i q_i.
bool strong_lrm_verdict(const BigInt &gsd, const LocalConfiguration &config);
void add_verdict(GsdReport &report, const LocalConfiguration &config);

std::string to_json(const GsdReport &report);

}  // namespace lrmlab

#endif
