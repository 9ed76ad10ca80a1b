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

#include "lrmlab/epr_region.h"

#include <cctype>
#include <cmath>

#include <Eigen/Dense>

#include "json.hpp"
#include "lrmlab/error.h"

namespace lrmlab::epr {
namespace {

constexpr unsigned kDenseCnzCap = 14;
constexpr int kDiagnoseCap = 20;
constexpr int kAllConstraintsCap = 20;

BigInt power_of_two(int K) {
    return BigInt(1) << K;
}

BigInt floor_nonnegative(const Rational &r) {
    return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

void check_point(const CorrelationPoint &p) {
    if (p.b < -1 || p.b > 1 || p.c < -1 || p.c > 1) throw InvalidInput("correlation point must lie in [-1, 1]^2");
}

void check_k(int K, int cap = kMaxK) {
    if (K < 1) throw InvalidInput("K must be at least 1");
    if (K > cap) throw CapExceeded("K is limited to " + std::to_string(cap));
}

struct Targets {
    BigInt size;  // 2^K
    Rational t;   // Tr(E) = Tr(F)
    Rational lhs;  // Tr(E^T F)
};

Targets targets(const CorrelationPoint &p, int K) {
    Targets out;
    out.size = power_of_two(K);
    out.t = (1 + p.c) / 2 * Rational(out.size);
    out.lhs = (1 + 2 * p.c + p.b) / 4 * Rational(out.size);
    return out;
}

Rational quadratic_rhs(const Rational &t, const BigInt &l) {
    Rational frac = t - Rational(l);
    return Rational(l) + frac * frac;
}

BigInt binding(const Targets &tg) {
    BigInt l = floor_nonnegative(tg.t);
    return l >= tg.size ? tg.size - 1 : l;
}

std::vector<Rational> aligned(const Targets &tg, size_t size) {
    std::vector<Rational> d(size, Rational(0));
    BigInt l = binding(tg);
    size_t li = (size_t)l;
    for (size_t i = 0; i < li; ++i) d[i] = 1;
    d[li] = tg.t - Rational(l);
    return d;
}

Rational dot(const std::vector<Rational> &a, const std::vector<Rational> &b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

nlohmann::json rational_json(const Rational &r) {
    return {{"exact", r.str()}, {"value", to_double(r)}};
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational { throw InvalidInput("cannot parse number '" + std::string(text) + "'"); };
    if (text.empty()) return fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    BigInt digits = 0;
    int scale = 0;
    bool any = false, dot = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isdigit((unsigned char)ch)) {
            digits = digits * 10 + (ch - '0');
            any = true;
            if (dot) ++scale;
        } else if (ch == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!any) return fail();
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') return fail();
        std::string rest(text.substr(i + 1));
        size_t used = 0;
        try {
            exponent = std::stol(rest, &used);
        } catch (const std::exception &) {
            return fail();
        }
        if (used != rest.size() || std::labs(exponent) > 1000) return fail();
    }
    long net = exponent - scale;
    Rational value(digits);
    BigInt ten = 1;
    for (long k = 0; k < std::labs(net); ++k) ten *= 10;
    value = net >= 0 ? value * Rational(ten) : value / Rational(ten);
    return negative ? -value : value;
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

FeasibilityCertificate feasible(const CorrelationPoint &point, int K, bool with_witness) {
    check_k(K);
    check_point(point);
    FeasibilityCertificate cert;
    cert.K = K;
    const Targets tg = targets(point, K);
    const BigInt l = binding(tg);
    cert.binding_l = (uint64_t)l;
    const Rational c1 = 1 + 2 * point.c + point.b;
    const Rational c2 = 1 - 2 * point.c + point.b;
    const Rational rhs = quadratic_rhs(tg.t, l);
    if (c1 < 0) {
        cert.violated = Violation{"c1", std::nullopt, c1, Rational(0)};
    } else if (c2 < 0) {
        cert.violated = Violation{"c2", std::nullopt, c2, Rational(0)};
    } else if (tg.lhs > rhs) {
        cert.violated = Violation{"c3", (uint64_t)l, tg.lhs, rhs};
    }
    cert.feasible = !cert.violated.has_value();
    if (cert.feasible && with_witness) {
        if (K > 24) throw CapExceeded("POVM witnesses are limited to K <= 24");
        cert.witness = construct_povm(point, K);
    }
    return cert;
}

bool feasible_all_constraints(const CorrelationPoint &point, int K) {
    check_k(K, kAllConstraintsCap);
    check_point(point);
    if (1 + 2 * point.c + point.b < 0 || 1 - 2 * point.c + point.b < 0) return false;
    const Targets tg = targets(point, K);
    for (BigInt l = 0; l < tg.size; ++l)
        if (tg.lhs > quadratic_rhs(tg.t, l)) return false;
    return true;
}

std::optional<int> min_epr(const CorrelationPoint &point, int k_max) {
    check_k(k_max);
    for (int K = 1; K <= k_max; ++K)
        if (feasible(point, K).feasible) return K;
    return std::nullopt;
}

PovmWitness construct_povm(const CorrelationPoint &point, int K) {
    check_k(K, 24);
    const FeasibilityCertificate cert = feasible(point, K);
    if (!cert.feasible) throw InvalidInput("construct_povm: the point is infeasible for K = " + std::to_string(K));
    const Targets tg = targets(point, K);
    const size_t size = (size_t)tg.size;
    const std::vector<Rational> e1 = aligned(tg, size);
    std::vector<Rational> e0, f0;
    if (tg.t * 2 <= Rational(tg.size)) {
        e0 = e1;
        f0.assign(e1.rbegin(), e1.rend());
    } else {
        e0.assign(size, point.c);
        f0.assign(size, point.c);
        for (size_t i = 0; i < size / 2; ++i) e0[i] = 1;
        for (size_t i = size / 2; i < size; ++i) f0[i] = 1;
    }
    // Tr(E(s) F(s)) along E(s) = (1-s) E0 + s E1 is A + (B - 2A) s + (A - B + C) s^2.
    const Rational A = dot(e0, f0), B = dot(e0, e1) + dot(e1, f0), C = dot(e1, e1);
    double s = 0;
    if (tg.lhs == A) {
        s = 0;
    } else if (tg.lhs == C) {
        s = 1;
    } else {
        const long double a = to_double(A), b = to_double(B), c = to_double(C), target = to_double(tg.lhs);
        auto value = [&](long double x) { return a + (b - 2 * a) * x + (a - b + c) * x * x - target; };
        long double lo = 0, hi = 1;
        const bool rising = value(hi) > value(lo);
        for (int it = 0; it < 200; ++it) {
            long double mid = (lo + hi) / 2;
            ((value(mid) < 0) == rising ? lo : hi) = mid;
        }
        s = (double)((lo + hi) / 2);
    }
    PovmWitness w;
    w.e.resize(size);
    w.f.resize(size);
    for (size_t i = 0; i < size; ++i) {
        w.e[i] = (1 - s) * to_double(e0[i]) + s * to_double(e1[i]);
        w.f[i] = (1 - s) * to_double(f0[i]) + s * to_double(e1[i]);
    }
    return w;
}

WitnessError check_witness(const CorrelationPoint &point, int K, const PovmWitness &w) {
    const Targets tg = targets(point, K);
    WitnessError err;
    long double te = 0, tf = 0, overlap = 0;
    for (size_t i = 0; i < w.e.size(); ++i) {
        te += w.e[i];
        tf += w.f[i];
        overlap += (long double)w.e[i] * w.f[i];
        err.in_range = err.in_range && w.e[i] >= 0 && w.e[i] <= 1 && w.f[i] >= 0 && w.f[i] <= 1;
    }
    err.in_range = err.in_range && w.e.size() == (size_t)tg.size && w.f.size() == w.e.size();
    err.trace_e = (double)std::fabs(te - (long double)to_double(tg.t));
    err.trace_f = (double)std::fabs(tf - (long double)to_double(tg.t));
    err.overlap = (double)std::fabs(overlap - (long double)to_double(tg.lhs));
    return err;
}

CorrelationPoint cnz_point(unsigned n) {
    if (n < 3) throw InvalidInput("cnz family needs n >= 3");
    Rational v = 1 - Rational(4) / Rational(BigInt(1) << n);
    return {v, v, "X"};
}

CorrelationPoint ghz_point(const Rational &alpha) {
    if (alpha < 0 || alpha > 1) throw InvalidInput("ghz alpha must lie in [0, 1]");
    return {Rational(1), 1 - 2 * alpha, "Z"};
}

DenseMoments cnz_dense_moments(unsigned n) {
    if (n < 3) throw InvalidInput("cnz family needs n >= 3");
    if (n > kDenseCnzCap) throw CapExceeded("dense C^{n-1}Z states are limited to n <= 14");
    const uint64_t dim = uint64_t(1) << n;
    Eigen::VectorXd psi = Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt((double)dim));
    psi[dim - 1] = -psi[dim - 1];
    // Qubits 0 and 1 are the two most significant bits.
    const uint64_t rest = dim / 4;
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    for (uint64_t r = 0; r < 4; ++r)
        for (uint64_t c = 0; c < 4; ++c)
            for (uint64_t e = 0; e < rest; ++e) rho(r, c) += psi[r * rest + e] * psi[c * rest + e];
    DenseMoments m;
    for (uint64_t r = 0; r < 4; ++r) {
        m.xx += rho(r, r ^ 3);
        m.xi += rho(r, r ^ 2);
        m.ix += rho(r, r ^ 1);
    }
    return m;
}

DiagnosisTable diagnose_family(std::string_view family, int k_max) {
    check_k(k_max, kDiagnoseCap);
    DiagnosisTable table;
    table.family = std::string(family);
    table.lrm_certified = true;
    if (family == "cnz") {
        for (int K = 1; K <= k_max; ++K) {
            DiagnosisRow row{K, std::nullopt, false};
            for (unsigned n = 3; n <= (unsigned)K + 64; ++n) {
                if (!feasible(cnz_point(n), K).feasible) {
                    row.minimal_parameter = n;
                    row.infeasible = true;
                    break;
                }
            }
            table.lrm_certified = table.lrm_certified && row.infeasible;
            table.rows.push_back(row);
        }
        return table;
    }
    if (family.rfind("ghz:", 0) == 0) {
        const CorrelationPoint point = ghz_point(parse_rational(family.substr(4)));
        for (int K = 1; K <= k_max; ++K) {
            DiagnosisRow row{K, std::nullopt, !feasible(point, K).feasible};
            if (row.infeasible) row.minimal_parameter = 2;
            table.lrm_certified = table.lrm_certified && row.infeasible;
            table.rows.push_back(row);
        }
        return table;
    }
    throw InvalidInput("unknown family '" + std::string(family) + "' (use cnz or ghz:<alpha>)");
}

std::vector<BoundaryPoint> region_boundary(int K, size_t samples) {
    check_k(K, 30);
    if (samples < 16) throw InvalidInput("region_boundary needs at least 16 samples");
    std::vector<Rational> cs;
    for (size_t i = 0; i < samples; ++i) cs.push_back(Rational(-1) + Rational(2 * (long)i, (long)(samples - 1)));
    std::vector<BoundaryPoint> out;
    const Rational size(power_of_two(K));
    for (const Rational &c : cs) {
        CorrelationPoint probe{Rational(0), c};
        const Targets tg = targets(probe, K);
        const BigInt l = binding(tg);
        Rational b = 4 * quadratic_rhs(tg.t, l) / size - 1 - 2 * c;
        out.push_back({to_double(b), to_double(c), "c3(l=" + l.str() + ")"});
    }
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        const Rational &c = *it;
        const bool upper_half = c >= 0;
        Rational b = upper_half ? Rational(-1 + 2 * c) : Rational(-1 - 2 * c);
        out.push_back({to_double(b), to_double(c), upper_half ? "c2" : "c1"});
    }
    return out;
}

uint64_t epr_cost_upper_bound(uint64_t n_qubits) {
    if (n_qubits < 1) throw InvalidInput("N must be at least 1");
    return n_qubits;
}

std::string to_json(const FeasibilityCertificate &cert) {
    nlohmann::json doc = {{"K", cert.K}, {"feasible", cert.feasible}, {"binding_l", cert.binding_l}};
    if (cert.violated) {
        nlohmann::json v = {{"constraint", cert.violated->constraint},
                            {"lhs", rational_json(cert.violated->lhs)},
                            {"rhs", rational_json(cert.violated->rhs)}};
        if (cert.violated->l) v["l"] = *cert.violated->l;
        doc["violated"] = v;
    }
    if (cert.witness) doc["witness"] = {{"E", cert.witness->e}, {"F", cert.witness->f}};
    return doc.dump(2);
}

std::string to_json(const DiagnosisTable &table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const DiagnosisRow &r : table.rows) {
        nlohmann::json row = {{"K", r.K}, {"infeasible", r.infeasible}};
        if (r.minimal_parameter) row["minimal_n"] = *r.minimal_parameter;
        else row["minimal_n"] = "never within bounds";
        rows.push_back(row);
    }
    return nlohmann::json{{"family", table.family},
                          {"rows", rows},
                          {"verdict", table.lrm_certified ? "LRM certified (under Theorem 6)" : "not certified"}}
        .dump(2);
}

std::string boundary_csv(int K, const std::vector<BoundaryPoint> &points) {
    std::string out = "b,c,K,binding_constraint\n";
    char buf[96];
    for (const BoundaryPoint &p : points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,", p.b, p.c, K);
        out += buf + p.binding + "\n";
    }
    return out;
}

}  // namespace lrmlab::epr
