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

#include <bit>

#include "lrmlab/simd/bit_kernels.h"

namespace lrmlab::simd {
namespace {

void xor_into_scalar(uint64_t *dst, const uint64_t *src, size_t words) {
    for (size_t i = 0; i < words; i++) {
        dst[i] ^= src[i];
    }
}

size_t popcount_scalar(const uint64_t *data, size_t words) {
    size_t total = 0;
    for (size_t i = 0; i < words; i++) {
        total += std::popcount(data[i]);
    }
    return total;
}

uint32_t symplectic_parity_scalar(
    const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    uint64_t acc = 0;
    for (size_t i = 0; i < words; i++) {
        acc ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    }
    return std::popcount(acc) & 1;
}

void symplectic_parities_scalar(
    const uint64_t *rows_x,
    const uint64_t *rows_z,
    size_t stride,
    size_t num_rows,
    const uint64_t *px,
    const uint64_t *pz,
    size_t words,
    uint8_t *out) {
    for (size_t r = 0; r < num_rows; r++) {
        out[r] = (uint8_t)symplectic_parity_scalar(rows_x + r * stride, rows_z + r * stride, px, pz, words);
    }
}

uint32_t mul_phase_inplace_scalar(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    // Per site: ab + cd + 2bc - a'b' (mod 4), with (a,b) the left site and (c,d) the right.
    uint64_t sum = 0;
    for (size_t i = 0; i < words; i++) {
        uint64_t a = ax[i], b = az[i], c = bx[i], d = bz[i];
        uint64_t a2 = a ^ c, b2 = b ^ d;
        sum += std::popcount(a & b) + std::popcount(c & d) + 2 * std::popcount(b & c);
        sum -= std::popcount(a2 & b2);
        ax[i] = a2;
        az[i] = b2;
    }
    return (uint32_t)(sum & 3);
}

}  // namespace

const BitKernels &scalar_kernels() {
    static const BitKernels table{
        Isa::kScalar,
        "scalar",
        xor_into_scalar,
        popcount_scalar,
        symplectic_parity_scalar,
        symplectic_parities_scalar,
        mul_phase_inplace_scalar,
    };
    return table;
}

}  // namespace lrmlab::simd
