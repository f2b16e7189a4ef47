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

#include <string>

#include "kanforge/algebra.hpp"

namespace kanforge {

/// Parses the line-oriented algebra format:
///
///   algebra NAME            header, required first
///   elements TOK+           unique tokens
///   order (TOK<TOK)+        any relation; closure taken
///   knot (TOK:TOK)+         the ~ table
///   neg (TOK:TOK)+          the ! table
///   star (TOK:TOK)+         optional
///   center TOK              optional
///
/// '#' starts a comment; sections may repeat to span lines.  Throws
/// ParseError (with line/column), UnknownElement, DuplicateTableEntry,
/// PartialTable.
Algebra parse_algebra(const std::string& text);

/// Reads and parses a file; throws IoError when it cannot be read.
Algebra load_algebra_file(const std::string& path);

/// Canonical document; parse(print(a)) is structurally equal to a.  The
/// order section lists covering pairs.
std::string print_algebra(const Algebra& a);

/// Hasse diagram in the DOT graph language: one node per element, one edge
/// per covering pair, drawn bottom to top.
std::string export_dot(const Algebra& a);

}  // namespace kanforge
