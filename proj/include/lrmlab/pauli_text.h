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

#ifndef LRMLAB_PAULI_TEXT_H
#define LRMLAB_PAULI_TEXT_H

#include <string>
#include <string_view>

#include "lrmlab/pauli_operator.h"
#include "lrmlab/qubit_pauli.h"

namespace lrmlab {

// Text forms:
//   all-qubit configurations: optional sign token (+, -, +i, -i) followed
//   by one of I X Y Z per site, e.g. "-XIZ".
//   other configurations: optional "p<k>:" phase prefix (e^{i pi k / L})
//   followed by dot-separated site tokens "x<a>z<b>", e.g. "x1z2.x0z0".
// render(parse(s)) == s for every canonical string; the only non-canonical
// inputs are a leading "+" and "p0:".

PauliOperator parse_pauli(std::string_view text, const LocalConfiguration &config);

/// Qubit form with the length taken from the text.
QubitPauli parse_qubit_pauli(std::string_view text);

std::string render_pauli(const PauliOperator &p);
std::string render_pauli(const QubitPauli &p);

}  // namespace lrmlab

#endif
