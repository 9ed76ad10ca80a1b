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

#include "lrmlab/code_json.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lrmlab/error.h"
#include "lrmlab/pauli_text.h"

namespace lrmlab {
namespace {

constexpr const char *kFormat = "lrm-code/1";

using nlohmann::json;

std::vector<PauliOperator> parse_list(const json &doc, const char *field, const LocalConfiguration &config,
                                      bool required) {
    std::vector<PauliOperator> out;
    if (!doc.contains(field)) {
        if (required) throw InvalidInput(std::string("code JSON: missing field '") + field + "'");
        return out;
    }
    const json &list = doc.at(field);
    if (!list.is_array()) throw InvalidInput(std::string("code JSON: '") + field + "' must be an array");
    for (const json &entry : list) {
        if (!entry.is_string()) throw InvalidInput(std::string("code JSON: '") + field + "' entries must be strings");
        out.push_back(parse_pauli(entry.get<std::string>(), config));
    }
    return out;
}

}  // namespace

std::string save_code_json(const StabilizerCode &code, const std::map<std::string, std::string> &meta) {
    json doc;
    doc["format"] = kFormat;
    json dims = json::array();
    for (uint32_t q : code.config().dims()) dims.push_back(q);
    doc["local_dims"] = std::move(dims);
    json stabilizers = json::array();
    for (const PauliOperator &g : code.group().generators()) stabilizers.push_back(render_pauli(g));
    doc["stabilizers"] = std::move(stabilizers);
    json lx = json::array(), lz = json::array();
    if (code.has_logicals()) {
        for (const PauliOperator &p : code.logicals().x) lx.push_back(render_pauli(p));
        for (const PauliOperator &p : code.logicals().z) lz.push_back(render_pauli(p));
    }
    doc["logical_x"] = std::move(lx);
    doc["logical_z"] = std::move(lz);
    json m = json::object();
    if (!code.name().empty()) m["name"] = code.name();
    for (const auto &[key, value] : meta) m[key] = value;
    doc["meta"] = std::move(m);
    return doc.dump(1) + "\n";
}

StabilizerCode load_code_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidInput(std::string("malformed code JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("code JSON: top level must be an object");
    if (!doc.contains("format") || doc["format"] != kFormat)
        throw InvalidInput(std::string("code JSON: format must be \"") + kFormat + "\"");
    if (!doc.contains("local_dims") || !doc["local_dims"].is_array())
        throw InvalidInput("code JSON: missing array field 'local_dims'");
    std::vector<uint32_t> dims;
    for (const json &d : doc["local_dims"]) {
        if (!d.is_number_unsigned()) throw InvalidInput("code JSON: local_dims entries must be positive integers");
        uint64_t v = d.get<uint64_t>();
        if (v > UINT32_MAX) throw InvalidInput("code JSON: local dimension too large");
        dims.push_back((uint32_t)v);
    }
    LocalConfiguration config(std::move(dims));
    std::vector<PauliOperator> stabilizers = parse_list(doc, "stabilizers", config, true);
    LogicalBasis basis;
    basis.x = parse_list(doc, "logical_x", config, false);
    basis.z = parse_list(doc, "logical_z", config, false);
    if (basis.x.size() != basis.z.size()) throw InvalidInput("code JSON: logical_x and logical_z differ in length");
    std::string name;
    if (doc.contains("meta") && doc["meta"].is_object() && doc["meta"].contains("name") &&
        doc["meta"]["name"].is_string())
        name = doc["meta"]["name"].get<std::string>();
    StabilizerGroup group = StabilizerGroup::create(config, std::move(stabilizers));
    std::optional<LogicalBasis> logicals;
    if (!basis.x.empty()) logicals = std::move(basis);
    return StabilizerCode::create(std::move(group), std::move(logicals), std::move(name));
}

void save_code_file(const StabilizerCode &code, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << save_code_json(code);
}

StabilizerCode load_code_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_code_json(buffer.str());
}

}  // namespace lrmlab
