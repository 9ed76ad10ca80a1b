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

#include "lrmlab/ground_space.h"

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "lrmlab/error.h"

namespace lrmlab {
namespace {

using Rational = boost::multiprecision::cpp_rational;

/// a + b tau over Q.
struct GoldenRational {
    Rational a, b;

    GoldenRational operator+(const GoldenRational &o) const {
        return {a + o.a, b + o.b};
    }
};

GoldenRational divide(const GoldenInt &x, const GoldenInt &y) {
    const GoldenInt::Int n = y.norm();
    if (n == 0) throw InvalidInput("quantum dimension with zero norm");
    const GoldenInt num = x * y.conjugate();
    return {Rational(num.a(), n), Rational(num.b(), n)};
}

std::pair<BigInt, BigInt> fibonacci_lucas(unsigned n) {
    BigInt f0 = 0, f1 = 1;
    for (unsigned i = 0; i < n; ++i) {
        BigInt next = f0 + f1;
        f0 = f1;
        f1 = next;
    }
    // F_n = f0, L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n.
    return {f0, 2 * f1 - f0};
}

BigInt power(long base, unsigned e) {
    return boost::multiprecision::pow(BigInt(base), e);
}

}  // namespace

void AnyonModel::validate() const {
    if (dims.empty() || dims[0] != GoldenInt(1)) throw InvalidInput("anyon model must start with d_0 = 1");
    for (const GoldenInt &d : dims)
        if (d.to_double() < 1 - 1e-12) throw InvalidInput("quantum dimension " + d.str() + " is below 1");
}

AnyonModel AnyonModel::fibonacci() {
    return {"fibonacci", {1, GoldenInt::tau(), GoldenInt::tau(), GoldenInt(1, 1)}};
}

AnyonModel AnyonModel::s3() {
    return {"s3", {1, 1, 2, 3, 3, 2, 2, 2}};
}

AnyonModel AnyonModel::toric() {
    return {"toric", {1, 1, 1, 1}};
}

AnyonModel AnyonModel::parse(std::string_view spec) {
    if (spec == "fibonacci") return fibonacci();
    if (spec == "s3") return s3();
    if (spec == "toric") return toric();
    if (spec.rfind("dims:", 0) == 0) {
        AnyonModel model{std::string(spec), {}};
        std::string_view rest = spec.substr(5);
        while (!rest.empty()) {
            size_t comma = rest.find(',');
            model.dims.push_back(GoldenInt::parse(rest.substr(0, comma)));
            rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        }
        model.validate();
        return model;
    }
    throw InvalidInput("unknown anyon model '" + std::string(spec) + "' (fibonacci, s3, toric, dims:<list>)");
}

BigInt ground_state_degeneracy(const AnyonModel &model, unsigned genus) {
    model.validate();
    if (genus < 1) throw InvalidInput("genus must be at least 1");
    GoldenInt total_dim2;
    for (const GoldenInt &d : model.dims) total_dim2 = total_dim2 + d * d;
    const GoldenInt numerator = total_dim2.pow(genus - 1);
    GoldenRational sum{0, 0};
    for (const GoldenInt &d : model.dims) sum = sum + divide(numerator, d.pow(2 * (long)(genus - 1)));
    if (sum.b != 0 || boost::multiprecision::denominator(sum.a) != 1)
        throw InvalidInput("ground-state degeneracy of model '" + model.name + "' is not an integer");
    return boost::multiprecision::numerator(sum.a);
}

GsdReport gsd(const AnyonModel &model, unsigned genus) {
    GsdReport report;
    report.model = model.name;
    report.genus = genus;
    report.gsd = ground_state_degeneracy(model, genus);
    report.factors = factorize(report.gsd);
    return report;
}

BigInt fibonacci_gsd_closed(unsigned genus) {
    if (genus < 1) throw InvalidInput("genus must be at least 1");
    auto [f, l] = fibonacci_lucas(genus - 1);
    return genus % 2 == 1 ? BigInt(power(5, genus - 1) * l * l) : BigInt(power(5, genus) * f * f);
}

BigInt s3_gsd_closed(unsigned genus) {
    if (genus < 1) throw InvalidInput("genus must be at least 1");
    const unsigned e = 2 * genus - 2;
    return 2 * power(6, e) + 4 * power(3, e) + 2 * power(2, e);
}

bool strong_lrm_verdict(const BigInt &gsd, const LocalConfiguration &config) {
    BigInt product = 1;
    for (uint32_t q : config.dims()) product *= q;
    return strip_common_primes(gsd, product) > 1;
}

void add_verdict(GsdReport &report, const LocalConfiguration &config) {
    report.verdicts.push_back({config.str(), strong_lrm_verdict(report.gsd, config)});
}

std::string to_json(const GsdReport &report) {
    nlohmann::json doc;
    doc["model"] = report.model;
    doc["genus"] = report.genus;
    if (report.gsd <= std::numeric_limits<uint64_t>::max()) doc["gsd"] = report.gsd.convert_to<uint64_t>();
    else doc["gsd"] = report.gsd.str();
    nlohmann::json primes = nlohmann::json::array();
    for (const BigInt &p : report.factors.primes) {
        if (p <= std::numeric_limits<uint64_t>::max()) primes.push_back(p.convert_to<uint64_t>());
        else primes.push_back(p.str());
    }
    doc["prime_factors"] = primes;
    doc["factorization_complete"] = report.factors.complete();
    if (!report.factors.complete()) doc["unfactored_cofactor"] = report.factors.cofactor.str();
    if (report.verdicts.size() == 1) doc["verdict"] = report.verdicts[0].strong_lrm;
    nlohmann::json verdicts = nlohmann::json::array();
    for (const GsdVerdict &v : report.verdicts) verdicts.push_back({{"local_config", v.config}, {"strong_lrm", v.strong_lrm}});
    doc["verdicts"] = verdicts;
    return doc.dump(2);
}

}  // namespace lrmlab
