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

#include "lrmlab/local_configuration.h"

#include <numeric>
#include <sstream>

#include "lrmlab/error.h"

namespace lrmlab {

LocalConfiguration::LocalConfiguration(std::vector<uint32_t> dims) {
    uint64_t l = 1;
    uint64_t total = 1;
    bool all_qubits = true;
    for (size_t j = 0; j < dims.size(); j++) {
        uint32_t q = dims[j];
        if (q < 2) {
            throw InvalidInput("site " + std::to_string(j) + " has dimension " + std::to_string(q) + " < 2");
        }
        all_qubits &= q == 2;
        l = std::lcm(l, (uint64_t)q);
        if (l > (1u << 30)) {
            throw InvalidInput("lcm of local dimensions exceeds 2^30");
        }
        if (total != 0) {
            total = total > ((uint64_t)1 << 62) / q ? 0 : total * q;
        }
    }
    data_ = std::make_shared<const Data>(Data{std::move(dims), (uint32_t)l, all_qubits, total});
}

LocalConfiguration LocalConfiguration::qubits(size_t n) {
    return LocalConfiguration(std::vector<uint32_t>(n, 2));
}

std::string LocalConfiguration::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t j = 0; j < num_sites(); j++) {
        if (j) {
            out << ",";
        }
        out << dim(j);
    }
    out << ")";
    return out.str();
}

bool LocalConfiguration::operator==(const LocalConfiguration &other) const {
    return data_ == other.data_ || data_->dims == other.data_->dims;
}

}  // namespace lrmlab
