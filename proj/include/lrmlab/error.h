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

#ifndef LRMLAB_ERROR_H
#define LRMLAB_ERROR_H

#include <stdexcept>
#include <string>

namespace lrmlab {

/// Malformed or out-of-domain input: bad Pauli text, mismatched
/// configurations, invalid stabilizer groups, unknown names.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A documented size cap was exceeded (enumeration width, dense dimension).
class CapExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// The operation is defined but not implemented for this configuration
/// (e.g. phase-resolved membership on qudits).
class Unsupported : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// An internal consistency check failed.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace lrmlab

#endif
