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

#include <immintrin.h>

#include <bit>

#include "lrmlab/simd/bit_kernels.h"

namespace lrmlab::simd {
namespace {

// Nibble-table popcount: per-byte counts via pshufb, then horizontal byte
// sums into the four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline uint64_t hsum_epi64(__m256i v) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const uint64_t *p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

inline void store(uint64_t *p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
}

void xor_into_avx2(uint64_t *dst, const uint64_t *src, size_t words) {
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    }
    for (; i < words; i++) {
        dst[i] ^= src[i];
    }
}

size_t popcount_avx2(const uint64_t *data, size_t words) {
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4) {
        acc = _mm256_add_epi64(acc, popcount_lanes(load(data + i)));
    }
    size_t total = hsum_epi64(acc);
    for (; i < words; i++) {
        total += std::popcount(data[i]);
    }
    return total;
}

uint32_t symplectic_parity_avx2(
    const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4) {
        __m256i t = _mm256_xor_si256(
            _mm256_and_si256(load(ax + i), load(bz + i)), _mm256_and_si256(load(az + i), load(bx + i)));
        acc = _mm256_xor_si256(acc, t);
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < words; i++) {
        folded ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    }
    return std::popcount(folded) & 1;
}

// Rows are short for every code we build (a few words), so the wide
// direction is across rows: four rows share one 256-bit register.
void symplectic_parities_avx2(
    const uint64_t *rows_x,
    const uint64_t *rows_z,
    size_t stride,
    size_t num_rows,
    const uint64_t *px,
    const uint64_t *pz,
    size_t words,
    uint8_t *out) {
    if (words >= 8) {
        for (size_t r = 0; r < num_rows; r++) {
            out[r] = (uint8_t)symplectic_parity_avx2(rows_x + r * stride, rows_z + r * stride, px, pz, words);
        }
        return;
    }
    size_t r = 0;
    const __m256i offsets = _mm256_setr_epi64x(0, (long long)stride, 2 * (long long)stride, 3 * (long long)stride);
    for (; r + 4 <= num_rows; r += 4) {
        __m256i acc = _mm256_setzero_si256();
        const long long *bx = reinterpret_cast<const long long *>(rows_x + r * stride);
        const long long *bz = reinterpret_cast<const long long *>(rows_z + r * stride);
        for (size_t w = 0; w < words; w++) {
            __m256i rx = _mm256_i64gather_epi64(bx + w, offsets, 8);
            __m256i rz = _mm256_i64gather_epi64(bz + w, offsets, 8);
            __m256i qx = _mm256_set1_epi64x((long long)px[w]);
            __m256i qz = _mm256_set1_epi64x((long long)pz[w]);
            acc = _mm256_xor_si256(acc, _mm256_xor_si256(_mm256_and_si256(rx, qz), _mm256_and_si256(rz, qx)));
        }
        __m256i counts = popcount_lanes(acc);
        alignas(32) uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), counts);
        for (size_t k = 0; k < 4; k++) {
            out[r + k] = (uint8_t)(lanes[k] & 1);
        }
    }
    for (; r < num_rows; r++) {
        out[r] = (uint8_t)symplectic_parity_avx2(rows_x + r * stride, rows_z + r * stride, px, pz, words);
    }
}

uint32_t mul_phase_inplace_avx2(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    size_t i = 0;
    __m256i plus = _mm256_setzero_si256();
    __m256i minus = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4) {
        __m256i a = load(ax + i), b = load(az + i), c = load(bx + i), d = load(bz + i);
        __m256i a2 = _mm256_xor_si256(a, c), b2 = _mm256_xor_si256(b, d);
        __m256i bc = popcount_lanes(_mm256_and_si256(b, c));
        plus = _mm256_add_epi64(plus, popcount_lanes(_mm256_and_si256(a, b)));
        plus = _mm256_add_epi64(plus, popcount_lanes(_mm256_and_si256(c, d)));
        plus = _mm256_add_epi64(plus, _mm256_add_epi64(bc, bc));
        minus = _mm256_add_epi64(minus, popcount_lanes(_mm256_and_si256(a2, b2)));
        store(ax + i, a2);
        store(az + i, b2);
    }
    uint64_t sum = hsum_epi64(plus) - hsum_epi64(minus);
    for (; i < words; i++) {
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

namespace detail {
const BitKernels &avx2_table() {
    static const BitKernels table{
        Isa::kAvx2,
        "avx2",
        xor_into_avx2,
        popcount_avx2,
        symplectic_parity_avx2,
        symplectic_parities_avx2,
        mul_phase_inplace_avx2,
    };
    return table;
}
}  // namespace detail

}  // namespace lrmlab::simd
