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

#include "lrmlab/golden_int.h"

#include <cctype>
#include <cmath>

#include "lrmlab/error.h"

namespace lrmlab {

GoldenInt GoldenInt::conjugate() const {
    return {a_ + b_, -b_};
}

GoldenInt::Int GoldenInt::norm() const {
    return a_ * a_ + a_ * b_ - b_ * b_;
}

bool GoldenInt::is_unit() const {
    Int n = norm();
    return n == 1 || n == -1;
}

GoldenInt GoldenInt::pow(long exponent) const {
    GoldenInt base = *this;
    if (exponent < 0) {
        Int n = norm();
        if (n != 1 && n != -1) throw InvalidInput("negative power of a non-unit " + str());
        base = n == 1 ? conjugate() : -conjugate();
        exponent = -exponent;
    }
    GoldenInt result(1);
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

double GoldenInt::to_double() const {
    static const double kTau = (1 + std::sqrt(5.0)) / 2;
    return a_.convert_to<double>() + b_.convert_to<double>() * kTau;
}

std::string GoldenInt::str() const {
    if (b_ == 0) return a_.str();
    std::string tau_part = b_ == 1 ? "tau" : b_ == -1 ? "-tau" : b_.str() + "*tau";
    if (a_ == 0) return tau_part;
    return a_.str() + (b_ > 0 ? "+" : "") + tau_part;
}

GoldenInt GoldenInt::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    auto fail = [&]() -> GoldenInt { throw InvalidInput("cannot parse quantum dimension '" + std::string(text) + "'"); };
    if (s.empty()) return fail();
    GoldenInt total;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        Int coefficient = i > start ? Int(s.substr(start, i - start)) : Int(1);
        bool has_digits = i > start;
        if (i < s.size() && s[i] == '*') ++i;
        if (s.compare(i, 3, "tau") == 0) {
            i += 3;
            total = total + GoldenInt(0, sign * coefficient);
        } else {
            if (!has_digits) return fail();
            total = total + GoldenInt(sign * coefficient, 0);
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') return fail();
    }
    return total;
}

}  // namespace lrmlab
