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

#ifndef LRMLAB_GOLDEN_INT_H
#define LRMLAB_GOLDEN_INT_H

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrmlab {

/// a + b tau in Z[tau], tau^2 = tau + 1.
class GoldenInt {
   public:
    using Int = boost::multiprecision::cpp_int;

    GoldenInt() = default;
    GoldenInt(long a) : a_(a) {
    }
    GoldenInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
    }
    static GoldenInt tau() {
        return {0, 1};
    }

    const Int &a() const {
        return a_;
    }
    const Int &b() const {
        return b_;
    }
    bool is_integer() const {
        return b_ == 0;
    }

    /// Galois conjugate, tau -> 1 - tau.
    GoldenInt conjugate() const;
    /// x * conjugate(x) = a^2 + ab - b^2.
    Int norm() const;
    bool is_unit() const;

    /// Negative exponents are allowed for units only.
    GoldenInt pow(long exponent) const;

    double to_double() const;
    /// "a+b*tau", "tau", "3" and the like.
    std::string str() const;
    /// Inverse of str(): integers, "tau", "2tau", "1+tau", "3-2*tau".
    static GoldenInt parse(std::string_view text);

    friend GoldenInt operator+(const GoldenInt &x, const GoldenInt &y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend GoldenInt operator-(const GoldenInt &x, const GoldenInt &y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend GoldenInt operator-(const GoldenInt &x) {
        return {-x.a_, -x.b_};
    }
    friend GoldenInt operator*(const GoldenInt &x, const GoldenInt &y) {
        Int bb = x.b_ * y.b_;
        return {x.a_ * y.a_ + bb, x.a_ * y.b_ + x.b_ * y.a_ + bb};
    }
    bool operator==(const GoldenInt &other) const = default;

   private:
    Int a_ = 0;
    Int b_ = 0;
};

}  // namespace lrmlab

#endif
