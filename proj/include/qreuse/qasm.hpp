// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qreuse/circuit.hpp"

namespace qreuse {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::uint32_t line = 0;    // 1-based
  std::uint32_t column = 0;  // 1-based
  std::string message;
};

struct ParseResult {
  std::optional<Circuit> circuit;  // engaged iff no Error diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return circuit.has_value(); }
};

// OpenQASM 2.0 front end. Multiple qreg/creg declarations flatten into one
// qubit/clbit index space in declaration order; user gate definitions are
// inlined at the call site; opaque declarations are carried through. Register
// arguments broadcast positionally. Classical conditionals (`if`) are
// rejected with a positioned error. Parameter expressions are limited to
// numeric literals, pi, unary minus, + - * / and parentheses, evaluated
// during parsing.
ParseResult parse_qasm(std::string_view text);

// Deterministic text form: fixed header, opaque declarations, one qreg (and
// one creg when clbits exist), then instructions. Floats print in shortest
// round-trip form, so emit(parse(emit(c))) == emit(c) byte for byte.
std::string emit_qasm(const Circuit& c);

}  // namespace qreuse
