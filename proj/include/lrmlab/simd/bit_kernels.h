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

#ifndef LRMLAB_SIMD_BIT_KERNELS_H
#define LRMLAB_SIMD_BIT_KERNELS_H

#include <cstddef>
#include <cstdint>

// Word-parallel kernels behind the packed Pauli representation. Each kernel
// has a scalar reference implementation and, on x86-64, an AVX2 variant.
// The variants are required to agree bit-for-bit; the active table is
// picked once at startup from the CPU features.

namespace lrmlab::simd {

enum class Isa { kScalar, kAvx2 };

struct BitKernels {
    Isa isa;
    const char *name;

    /// dst[i] ^= src[i]
    void (*xor_into)(uint64_t *dst, const uint64_t *src, size_t words);

    size_t (*popcount)(const uint64_t *data, size_t words);

    /// Parity of |{j : (ax_j bz_j) xor (az_j bx_j)}|; 1 means the two Paulis anticommute.
    uint32_t (*symplectic_parity)(
        const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);

    /// out[r] = symplectic_parity(row r, p) for rows laid out at `stride` words apart.
    void (*symplectic_parities)(
        const uint64_t *rows_x,
        const uint64_t *rows_z,
        size_t stride,
        size_t num_rows,
        const uint64_t *px,
        const uint64_t *pz,
        size_t words,
        uint8_t *out);

    /// (ax, az) <- (ax ^ bx, az ^ bz). Returns the log_i phase (mod 4) picked up
    /// by the product when site (1,1) denotes the Hermitian Y.
    uint32_t (*mul_phase_inplace)(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);
};

const BitKernels &scalar_kernels();

/// Null when the build or the running CPU lacks AVX2.
const BitKernels *avx2_kernels();

/// The active table. Setting LRMLAB_SIMD=scalar in the environment forces
/// the reference kernels.
const BitKernels &kernels();

namespace detail {
const BitKernels &avx2_table();
}

}  // namespace lrmlab::simd

#endif
