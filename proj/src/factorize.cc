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

#include "lrmlab/factorize.h"

#include <algorithm>

#include <boost/multiprecision/miller_rabin.hpp>

#include "lrmlab/error.h"

namespace lrmlab {
namespace {

const std::vector<uint32_t> &small_primes() {
    static const std::vector<uint32_t> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit + 1, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = (uint64_t)i * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

/// A nontrivial factor of the odd composite n, or 0 when the budget is spent.
BigInt brent_rho(const BigInt &n, uint64_t budget) {
    for (unsigned c = 1; c < 64 && budget > 0; ++c) {
        BigInt y = 2, x, ys, q = 1, g = 1;
        uint64_t r = 1;
        auto step = [&](const BigInt &v) { return BigInt((v * v + c) % n); };
        do {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = step(y);
            uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const uint64_t batch = std::min<uint64_t>(128, r - k);
                for (uint64_t i = 0; i < batch; ++i) {
                    y = step(y);
                    q = (q * (x > y ? BigInt(x - y) : BigInt(y - x))) % n;
                }
                g = gcd(q, n);
                k += batch;
                budget = budget > batch ? budget - batch : 0;
                if (budget == 0 && g == 1) return 0;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
    return 0;
}

void split(const BigInt &n, uint64_t budget, Factorization &out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes.push_back(n);
        return;
    }
    BigInt d = brent_rho(n, budget);
    if (d == 0) {
        out.cofactor *= n;
        return;
    }
    split(d, budget, out);
    split(n / d, budget, out);
}

}  // namespace

bool is_probable_prime(const BigInt &n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

Factorization factorize(BigInt n, uint64_t rho_budget) {
    if (n < 1) throw InvalidInput("factorize expects a positive integer");
    Factorization out;
    for (uint32_t p : small_primes()) {
        if (BigInt(p) * p > n) break;
        while (n % p == 0) {
            out.primes.push_back(p);
            n /= p;
        }
    }
    split(n, rho_budget, out);
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

BigInt strip_common_primes(BigInt n, const BigInt &m) {
    if (n < 1 || m < 1) throw InvalidInput("strip_common_primes expects positive integers");
    BigInt g = gcd(n, m);
    while (g > 1) {
        while (n % g == 0) n /= g;
        g = gcd(n, g);
    }
    return n;
}

}  // namespace lrmlab
