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

#ifndef LRMLAB_FACTORIZE_H
#define LRMLAB_FACTORIZE_H

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrmlab {

using BigInt = boost::multiprecision::cpp_int;

struct Factorization {
    /// Prime factors with multiplicity, ascending.
    std::vector<BigInt> primes;
    /// Composite part left when the rho budget ran out; 1 when complete.
    BigInt cofactor = 1;

    bool complete() const {
        return cofactor == 1;
    }
};

inline constexpr uint32_t kTrialDivisionLimit = 1000000;

bool is_probable_prime(const BigInt &n);

/// Trial division up to 10^6, then Brent's Pollard rho with at most
/// `rho_budget` iterations per split.
Factorization factorize(BigInt n, uint64_t rho_budget = uint64_t(1) << 22);

/// Strips from n every prime that divides m. n > 1 afterwards iff n has a
/// prime factor not dividing m.
BigInt strip_common_primes(BigInt n, const BigInt &m);

}  // namespace lrmlab

#endif
