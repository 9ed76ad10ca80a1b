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

#ifndef LRMLAB_SRC_INTEGER_LATTICE_H
#define LRMLAB_SRC_INTEGER_LATTICE_H

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrmlab::detail {

struct PatternLattice {
    /// Size of the subgroup of (Z_{m_0} x ... x Z_{m_{d-1}}) spanned by the patterns.
    boost::multiprecision::cpp_int image_size;
    /// Generators of {c in Z^k : sum_i c_i pattern_i = 0 mod moduli}.
    std::vector<std::vector<int64_t>> kernel;
};

/// Integer row reduction of [patterns | I ; diag(moduli) | 0].
PatternLattice analyze_pattern_lattice(std::span<const std::vector<int64_t>> patterns, std::span<const uint32_t> moduli);

}  // namespace lrmlab::detail

#endif
