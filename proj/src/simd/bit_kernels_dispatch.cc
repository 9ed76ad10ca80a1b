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

#include <cstdlib>
#include <cstring>

#include "lrmlab/simd/bit_kernels.h"

namespace lrmlab::simd {

const BitKernels *avx2_kernels() {
#if defined(LRMLAB_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const BitKernels &kernels() {
    static const BitKernels *active = [] {
        const char *forced = std::getenv("LRMLAB_SIMD");
        if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
            return &scalar_kernels();
        }
        const BitKernels *wide = avx2_kernels();
        return wide != nullptr ? wide : &scalar_kernels();
    }();
    return *active;
}

}  // namespace lrmlab::simd
