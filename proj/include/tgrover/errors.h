// Copyright 2026 The transmon-grover Authors
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

#ifndef TGROVER_ERRORS_H
#define TGROVER_ERRORS_H

#include <stdexcept>
#include <string>

namespace tgrover {

/// Raised when a computed quantity violates an invariant that should hold by
/// construction (e.g. a Hermitian expectation value with a sizable imaginary part).
class ConsistencyError : public std::logic_error {
   public:
    explicit ConsistencyError(const std::string &what) : std::logic_error(what) {
    }
};

class SingularMatrixError : public std::runtime_error {
   public:
    explicit SingularMatrixError(const std::string &what) : std::runtime_error(what) {
    }
};

/// A conditional outcome table with an all-zero row cannot produce an outcome fidelity.
class DegenerateTableError : public std::runtime_error {
   public:
    explicit DegenerateTableError(const std::string &what) : std::runtime_error(what) {
    }
};

[[noreturn]] void throw_invalid_argument(const std::string &what);

}  // namespace tgrover

#endif
