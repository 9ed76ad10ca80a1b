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

#ifndef LRMLAB_LOCAL_CONFIGURATION_H
#define LRMLAB_LOCAL_CONFIGURATION_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lrmlab {

/// The tuple of local site dimensions (q_1, ..., q_m) fixing the tensor
/// structure. Cheap to copy; the dimension list is shared and immutable.
class LocalConfiguration {
   public:
    /// Throws InvalidInput if any dimension is below 2 or the lcm overflows.
    explicit LocalConfiguration(std::vector<uint32_t> dims);

    static LocalConfiguration qubits(size_t n);

    size_t num_sites() const {
        return data_->dims.size();
    }
    uint32_t dim(size_t site) const {
        return data_->dims[site];
    }
    std::span<const uint32_t> dims() const {
        return data_->dims;
    }
    /// lcm of all site dimensions (1 for the empty configuration).
    uint32_t lcm() const {
        return data_->lcm;
    }
    /// Phases are exponents of e^{i pi / L} reduced modulo 2L.
    uint32_t phase_modulus() const {
        return 2 * data_->lcm;
    }
    bool all_qubits() const {
        return data_->all_qubits;
    }
    /// Product of the dimensions, or 0 when it exceeds 2^62.
    uint64_t total_dimension() const {
        return data_->total_dimension;
    }

    std::string str() const;

    bool operator==(const LocalConfiguration &other) const;
    bool operator!=(const LocalConfiguration &other) const {
        return !(*this == other);
    }

   private:
    struct Data {
        std::vector<uint32_t> dims;
        uint32_t lcm;
        bool all_qubits;
        uint64_t total_dimension;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace lrmlab

#endif
