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

#include "integer_lattice.h"

#include <cstdlib>

#include "lrmlab/error.h"

namespace lrmlab::detail {
namespace {

int64_t checked_sub_mul(int64_t a, int64_t q, int64_t b) {
    int64_t prod, out;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
        throw CapExceeded("integer overflow while reducing the pattern lattice");
    }
    return out;
}

struct Row {
    std::vector<int64_t> left;
    std::vector<int64_t> right;
};

}  // namespace

PatternLattice analyze_pattern_lattice(std::span<const std::vector<int64_t>> patterns, std::span<const uint32_t> moduli) {
    size_t width = moduli.size();
    size_t k = patterns.size();
    std::vector<Row> rows;
    rows.reserve(k + width);
    for (size_t i = 0; i < k; i++) {
        Row row{patterns[i], std::vector<int64_t>(k, 0)};
        row.right[i] = 1;
        rows.push_back(std::move(row));
    }
    for (size_t c = 0; c < width; c++) {
        Row row{std::vector<int64_t>(width, 0), std::vector<int64_t>(k, 0)};
        row.left[c] = moduli[c];
        rows.push_back(std::move(row));
    }

    std::vector<bool> used(rows.size(), false);
    boost::multiprecision::cpp_int det = 1;
    for (size_t c = 0; c < width; c++) {
        size_t pivot = rows.size();
        while (true) {
            pivot = rows.size();
            for (size_t r = 0; r < rows.size(); r++) {
                if (used[r] || rows[r].left[c] == 0) {
                    continue;
                }
                if (pivot == rows.size() || std::llabs(rows[r].left[c]) < std::llabs(rows[pivot].left[c])) {
                    pivot = r;
                }
            }
            if (pivot == rows.size()) {
                throw InternalError("pattern lattice lost full rank");
            }
            bool reduced_all = true;
            for (size_t r = 0; r < rows.size(); r++) {
                if (r == pivot || used[r] || rows[r].left[c] == 0) {
                    continue;
                }
                int64_t q = rows[r].left[c] / rows[pivot].left[c];
                for (size_t j = 0; j < width; j++) {
                    rows[r].left[j] = checked_sub_mul(rows[r].left[j], q, rows[pivot].left[j]);
                }
                for (size_t j = 0; j < k; j++) {
                    rows[r].right[j] = checked_sub_mul(rows[r].right[j], q, rows[pivot].right[j]);
                }
                reduced_all &= rows[r].left[c] == 0;
            }
            if (reduced_all) {
                break;
            }
        }
        used[pivot] = true;
        det *= std::llabs(rows[pivot].left[c]);
    }

    PatternLattice result;
    boost::multiprecision::cpp_int volume = 1;
    for (uint32_t m : moduli) {
        volume *= m;
    }
    result.image_size = volume / det;
    for (size_t r = 0; r < rows.size(); r++) {
        if (used[r]) {
            continue;
        }
        bool nonzero = false;
        for (int64_t v : rows[r].right) {
            nonzero |= v != 0;
        }
        if (nonzero) {
            result.kernel.push_back(std::move(rows[r].right));
        }
    }
    return result;
}

}  // namespace lrmlab::detail
