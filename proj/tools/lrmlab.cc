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

// lrmlab: command-line front end. JSON on stdout, a one-line summary on
// stderr, exit code 2 on invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrmlab/code_json.h"
#include "lrmlab/code_library.h"
#include "lrmlab/epr_region.h"
#include "lrmlab/error.h"
#include "lrmlab/ground_space.h"
#include "lrmlab/magic_witness.h"
#include "lrmlab/parallel.h"
#include "lrmlab/pauli_text.h"

namespace {

using namespace lrmlab;
using nlohmann::json;

constexpr int kExitInvalid = 2;

struct CodeSource {
    std::string name;
    std::string file;

    void add(CLI::App *cmd) {
        cmd->add_option("--code,--name", name, "builtin code: gross, toric2d:L, toric3d:L, repetition:n, five_one_three, steane");
        cmd->add_option("--file", file, "code in lrm-code/1 JSON");
    }

    StabilizerCode load() const {
        if (name.empty() == file.empty()) throw InvalidInput("give exactly one of --code/--name or --file");
        return name.empty() ? load_code_file(file) : codes::build_named(name);
    }
};

std::vector<size_t> parse_region(const StabilizerCode &code, const std::string &text) {
    if (text.size() >= 2 && (text[0] == 'X' || text[0] == 'Z' || text[0] == 'x' || text[0] == 'z') &&
        std::isdigit((unsigned char)text[1])) {
        size_t index = std::stoul(text.substr(1));
        const bool is_x = text[0] == 'X' || text[0] == 'x';
        const auto &ops = is_x ? code.qubit_logical_x() : code.qubit_logical_z();
        if (index < 1 || index > ops.size())
            throw InvalidInput("logical index in region '" + text + "' out of range 1.." + std::to_string(ops.size()));
        return ops[index - 1].support();
    }
    std::vector<size_t> sites;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput("malformed region '" + text + "' (X<i>, Z<i> or a site list)");
        sites.push_back(v);
    }
    return sites;
}

LogicalState build_state(const StabilizerCode &code, std::string label, const std::string &gate, size_t logical) {
    const size_t k = code.qubit_logical_x().size();
    if (label.empty() || label == "plus") label = std::string(k, '+');
    else if (label == "zero") label = std::string(k, '0');
    LogicalState rho = LogicalState::parse(label);
    if (rho.num_qubits() != k) throw InvalidInput("state label has " + std::to_string(rho.num_qubits()) + " characters, code has k = " + std::to_string(k));
    if (!gate.empty()) {
        if (logical < 1 || logical > k) throw InvalidInput("--logical must lie in 1.." + std::to_string(k));
        rho = GateSpec::parse(gate, logical - 1).apply(rho);
    }
    return rho;
}

void emit(const std::string &text) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
}

void summary(const std::string &text) {
    std::cerr << text << '\n';
}

std::vector<uint32_t> parse_dims(const std::string &text) {
    std::vector<uint32_t> dims;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput("malformed local configuration '" + text + "'");
        dims.push_back((uint32_t)v);
    }
    return dims;
}

epr::CorrelationPoint point_from(const std::string &b, const std::string &c) {
    return {epr::parse_rational(b), epr::parse_rational(c)};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"lrmlab: stabilizer-code magic witnesses, EPR feasibility and ground-space degeneracy"};
    app.fallthrough();
    app.require_subcommand(1);
    size_t threads = default_thread_count();
    app.add_option("--threads", threads, "worker threads (default: LRMLAB_THREADS or hardware)");

    std::function<void()> action;

    // code
    auto *code_cmd = app.add_subcommand("code", "build, validate and describe stabilizer codes");
    code_cmd->require_subcommand(1);
    CodeSource build_src, validate_src, info_src;
    std::string build_out;
    auto *code_build = code_cmd->add_subcommand("build", "emit a builtin code as lrm-code/1 JSON");
    code_build->add_option("--code,--name", build_src.name, "builtin code name")->required();
    code_build->add_option("--out", build_out, "write to a file instead of stdout");
    code_build->callback([&] {
        action = [&] {
            StabilizerCode code = codes::build_named(build_src.name);
            if (build_out.empty()) emit(save_code_json(code));
            else save_code_file(code, build_out);
            summary("built " + code.name() + ": n=" + std::to_string(code.num_sites()) +
                    " k=" + std::to_string(code.num_logical_qubits()));
        };
    });
    auto *code_validate = code_cmd->add_subcommand("validate", "re-check group and logical invariants");
    validate_src.add(code_validate);
    code_validate->callback([&] {
        action = [&] {
            StabilizerCode code = validate_src.load();
            json doc = {{"valid", true}, {"n", code.num_sites()}, {"local_dims", code.config().str()}};
            doc["order"] = code.group().order().str();
            doc["code_dimension"] = code.code_dimension().str();
            emit(doc.dump(2));
            summary("valid: " + (code.name().empty() ? std::string("code") : code.name()));
        };
    });
    auto *code_info = code_cmd->add_subcommand("info", "parameters, logical weights and small-code distance");
    info_src.add(code_info);
    code_info->callback([&] {
        action = [&] {
            StabilizerCode code = info_src.load();
            json doc = {{"name", code.name()}, {"n", code.num_sites()}, {"num_stabilizers", code.group().generators().size()}};
            if (code.is_qubit()) {
                doc["rank"] = code.group().rank();
                doc["k"] = code.num_logical_qubits();
                if (code.has_logicals()) {
                    json wx = json::array(), wz = json::array();
                    for (const auto &p : code.qubit_logical_x()) wx.push_back(p.weight());
                    for (const auto &p : code.qubit_logical_z()) wz.push_back(p.weight());
                    doc["logical_x_weights"] = wx;
                    doc["logical_z_weights"] = wz;
                }
                if (code.num_sites() <= 16 && code.num_logical_qubits() > 0) doc["distance"] = brute_distance(code);
            } else {
                doc["code_dimension"] = code.code_dimension().str();
            }
            emit(doc.dump(2));
            summary(code.name() + ": n=" + std::to_string(code.num_sites()));
        };
    });

    // magic
    auto *magic_cmd = app.add_subcommand("magic", "Pauli-spectrum tests of encoded logical states");
    magic_cmd->require_subcommand(1);
    CodeSource f_src, t_src, u_src, s_src;
    std::string f_state, f_gate, f_region, s_state, s_gate, t_gate = "T", u_region, t_inputs;
    std::vector<std::string> s_paulis;
    size_t f_logical = 1, s_logical = 1, t_logical = 1, t_max_inputs = 64;
    uint64_t t_seed = 1;
    double tolerance = 1e-6;

    auto *magic_f = magic_cmd->add_subcommand("f-support", "f(psi, R) for an encoded logical state");
    f_src.add(magic_f);
    magic_f->add_option("--state", f_state, "logical state label over +-01ijTM, or plus/zero (default plus)");
    magic_f->add_option("--gate", f_gate, "optional gate applied to the state first");
    magic_f->add_option("--logical", f_logical, "1-based logical index for --gate");
    magic_f->add_option("--region", f_region, "X<i>, Z<i> (support of a stored logical) or a site list")->required();
    magic_f->add_option("--tolerance", tolerance, "integer-test tolerance");
    magic_f->callback([&] {
        action = [&] {
            StabilizerCode code = f_src.load();
            LogicalState rho = build_state(code, f_state, f_gate, f_logical);
            SpectrumReport r = f_support(code, rho, parse_region(code, f_region), {tolerance, threads});
            emit(to_json(r));
            char buf[128];
            std::snprintf(buf, sizeof buf, "f = %.12g (%s)", r.f_value, verdict_name(r.verdict));
            summary(buf);
        };
    });

    auto *magic_t = magic_cmd->add_subcommand("test-transversal", "search for a certificate that a gate is not strictly transversal");
    t_src.add(magic_t);
    magic_t->add_option("--gate", t_gate, "T, Tdg, sqrtT, S, Sdg, H, X, Y, Z or phase:<theta>");
    magic_t->add_option("--logical", t_logical, "1-based logical index");
    magic_t->add_option("--inputs", t_inputs, "comma-separated stabilizer input labels");
    magic_t->add_option("--seed", t_seed, "seed for sampled inputs");
    magic_t->add_option("--max-inputs", t_max_inputs, "cap on default inputs");
    magic_t->add_option("--tolerance", tolerance, "integer-test tolerance");
    magic_t->callback([&] {
        action = [&] {
            StabilizerCode code = t_src.load();
            TransversalOptions opts;
            opts.scan = {tolerance, threads};
            opts.seed = t_seed;
            opts.max_inputs = t_max_inputs;
            std::stringstream in(t_inputs);
            for (std::string item; std::getline(in, item, ',');) opts.inputs.push_back(item);
            if (t_logical < 1) throw InvalidInput("--logical is 1-based");
            TransversalReport r = transversal_report(code, GateSpec::parse(t_gate, t_logical - 1), opts);
            emit(to_json(r));
            summary(r.verdict == Verdict::kCertified
                        ? "no strictly transversal " + r.gate + " (witness " + r.region_label + ", input " + r.input + ")"
                        : "inconclusive for " + r.gate);
        };
    });

    auto *magic_u = magic_cmd->add_subcommand("uniqueness", "normalizer elements supported exactly on a region");
    u_src.add(magic_u);
    magic_u->add_option("--region", u_region, "X<i>, Z<i> or a site list")->required();
    magic_u->callback([&] {
        action = [&] {
            StabilizerCode code = u_src.load();
            std::vector<QubitPauli> found = uniqueness_scan(code.group(), parse_region(code, u_region), threads);
            json list = json::array();
            for (const QubitPauli &p : found) list.push_back(render_pauli(p));
            emit(json{{"count", found.size()}, {"elements", list}}.dump(2));
            summary(std::to_string(found.size()) + " normalizer element(s) on the region");
        };
    });

    auto *magic_s = magic_cmd->add_subcommand("spectrum", "encoded expectation values of given Paulis");
    s_src.add(magic_s);
    magic_s->add_option("--state", s_state, "logical state label (default plus)");
    magic_s->add_option("--gate", s_gate, "optional gate applied to the state first");
    magic_s->add_option("--logical", s_logical, "1-based logical index for --gate");
    magic_s->add_option("--pauli", s_paulis, "n-qubit Pauli string (repeatable)")->required();
    magic_s->callback([&] {
        action = [&] {
            StabilizerCode code = s_src.load();
            LogicalState rho = build_state(code, s_state, s_gate, s_logical);
            json list = json::array();
            for (const std::string &text : s_paulis) {
                QubitPauli p = parse_qubit_pauli(text);
                list.push_back({{"pauli", render_pauli(p)}, {"expectation", logical_expectation(code, rho, p)}});
            }
            emit(json{{"terms", list}}.dump(2));
            summary(std::to_string(s_paulis.size()) + " expectation value(s)");
        };
    });

    // epr
    auto *epr_cmd = app.add_subcommand("epr", "EPR-pair feasibility of two-qubit correlations");
    epr_cmd->require_subcommand(1);
    std::string eb, ec, family = "cnz", boundary_format = "csv";
    int ek = 1, ek_max = 20;
    size_t samples = 65;
    bool with_witness = false;

    auto *epr_feasible = epr_cmd->add_subcommand("feasible", "exact membership test for K EPR pairs");
    epr_feasible->add_option("--b", eb, "<P x P>")->required();
    epr_feasible->add_option("--c", ec, "<P x I> = <I x P>")->required();
    epr_feasible->add_option("--k", ek, "number of EPR pairs")->required();
    epr_feasible->add_flag("--witness", with_witness, "attach a POVM witness when feasible");
    epr_feasible->callback([&] {
        action = [&] {
            auto cert = epr::feasible(point_from(eb, ec), ek, with_witness);
            emit(epr::to_json(cert));
            summary(cert.feasible ? "feasible" : "infeasible (" + cert.violated->constraint + ")");
        };
    });
    auto *epr_min = epr_cmd->add_subcommand("min-k", "smallest K for which the point is feasible");
    epr_min->add_option("--b", eb, "<P x P>")->required();
    epr_min->add_option("--c", ec, "<P x I> = <I x P>")->required();
    epr_min->add_option("--k-max", ek_max, "largest K tried");
    epr_min->callback([&] {
        action = [&] {
            auto k = epr::min_epr(point_from(eb, ec), ek_max);
            json doc = {{"k_max", ek_max}};
            doc["min_k"] = k ? json(*k) : json(nullptr);
            emit(doc.dump(2));
            summary(k ? "min K = " + std::to_string(*k) : "infeasible for every K <= " + std::to_string(ek_max));
        };
    });
    auto *epr_povm = epr_cmd->add_subcommand("povm", "diagonal POVM witness for a feasible point");
    epr_povm->add_option("--b", eb, "<P x P>")->required();
    epr_povm->add_option("--c", ec, "<P x I> = <I x P>")->required();
    epr_povm->add_option("--k", ek, "number of EPR pairs")->required();
    epr_povm->callback([&] {
        action = [&] {
            auto point = point_from(eb, ec);
            auto w = epr::construct_povm(point, ek);
            auto err = epr::check_witness(point, ek, w);
            emit(json{{"K", ek}, {"E", w.e}, {"F", w.f},
                      {"errors", {{"trace_e", err.trace_e}, {"trace_f", err.trace_f}, {"overlap", err.overlap}}}}
                     .dump(2));
            summary("witness on " + std::to_string(w.e.size()) + " diagonal entries");
        };
    });
    auto *epr_boundary = epr_cmd->add_subcommand("boundary", "boundary polyline of the K-pair region");
    epr_boundary->add_option("--k", ek, "number of EPR pairs")->required();
    epr_boundary->add_option("--samples", samples, "c samples per curve (>= 16)");
    epr_boundary->add_option("--format", boundary_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    epr_boundary->callback([&] {
        action = [&] {
            auto points = epr::region_boundary(ek, samples);
            if (boundary_format == "csv") {
                std::cout << epr::boundary_csv(ek, points);
            } else {
                json list = json::array();
                for (const auto &p : points) list.push_back({{"b", p.b}, {"c", p.c}, {"binding_constraint", p.binding}});
                emit(json{{"K", ek}, {"points", list}}.dump(2));
            }
            summary(std::to_string(points.size()) + " boundary points");
        };
    });
    auto *epr_diag = epr_cmd->add_subcommand("diagnose", "per-K infeasibility table for a state family");
    epr_diag->add_option("--family", family, "cnz or ghz:<alpha>");
    epr_diag->add_option("--k-max", ek_max, "largest K (<= 20)");
    epr_diag->callback([&] {
        action = [&] {
            auto table = epr::diagnose_family(family, ek_max);
            emit(epr::to_json(table));
            summary(table.lrm_certified ? "LRM certified (under Theorem 6)" : "not certified");
        };
    });

    // phase
    auto *phase_cmd = app.add_subcommand("phase", "ground-space degeneracy and strong-LRM verdicts");
    phase_cmd->require_subcommand(1);
    std::string model = "fibonacci";
    unsigned genus = 1;
    std::vector<std::string> local_configs;
    auto add_phase_options = [&](CLI::App *cmd) {
        cmd->add_option("--model", model, "fibonacci, s3, toric or dims:<d0,d1,...>");
        cmd->add_option("--genus", genus, "surface genus g >= 1")->required();
        cmd->add_option("--local-config", local_configs, "local dimensions q1,q2,... (repeatable)");
    };
    auto *phase_gsd = phase_cmd->add_subcommand("gsd", "exact degeneracy with prime factorization");
    add_phase_options(phase_gsd);
    auto *phase_verdict = phase_cmd->add_subcommand("verdict", "strong-LRM verdicts only");
    add_phase_options(phase_verdict);
    auto run_phase = [&](bool full) {
        GsdReport r = gsd(AnyonModel::parse(model), genus);
        for (const std::string &c : local_configs) add_verdict(r, LocalConfiguration(parse_dims(c)));
        if (full) {
            emit(to_json(r));
        } else {
            json list = json::array();
            for (const auto &v : r.verdicts) list.push_back({{"local_config", v.config}, {"strong_lrm", v.strong_lrm}});
            emit(json{{"model", r.model}, {"genus", genus}, {"verdicts", list}}.dump(2));
        }
        summary("gsd = " + r.gsd.str());
    };
    phase_gsd->callback([&] { action = [&] { run_phase(true); }; });
    phase_verdict->callback([&] {
        action = [&] {
            if (local_configs.empty()) throw InvalidInput("phase verdict needs at least one --local-config");
            run_phase(false);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }
    try {
        if (threads == 0) throw InvalidInput("--threads must be positive");
        if (action) action();
        return 0;
    } catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const CapExceeded &e) {
        std::cerr << "error: limit exceeded: " << e.what() << '\n';
    } catch (const Unsupported &e) {
        std::cerr << "error: unsupported: " << e.what() << '\n';
    }
    return kExitInvalid;
}
