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

#ifndef LRMLAB_CODE_JSON_H
#define LRMLAB_CODE_JSON_H

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "lrmlab/stabilizer_code.h"

namespace lrmlab {

/// Serializes a code in the "lrm-code/1" format. `meta` entries are written
/// as strings alongside the code name.
std::string save_code_json(const StabilizerCode &code, const std::map<std::string, std::string> &meta = {});
StabilizerCode load_code_json(std::string_view text);

void save_code_file(const StabilizerCode &code, const std::filesystem::path &path);
StabilizerCode load_code_file(const std::filesystem::path &path);

}  // namespace lrmlab

#endif
