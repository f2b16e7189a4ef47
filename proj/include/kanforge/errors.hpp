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

#include <stdexcept>
#include <string>
#include <vector>

namespace kanforge {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- lattice construction ----------------------------------------------------

struct NotAPartialOrder : Error {
  using Error::Error;
};

struct NotALattice : Error {
  NotALattice(const std::string& what, std::string x, std::string y)
      : Error(what), first(std::move(x)), second(std::move(y)) {}
  std::string first, second;  // offending pair
};

struct NoBounds : Error {
  using Error::Error;
};

// -- term evaluation ---------------------------------------------------------

struct MissingOperation : Error {
  MissingOperation(const std::string& what, std::string sym)
      : Error(what), symbol(std::move(sym)) {}
  std::string symbol;
};

struct UnboundVariable : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

// -- variety checking --------------------------------------------------------

struct UnknownVariety : Error {
  using Error::Error;
};

/// The knot table has more than one fixed point; Kleene axiom K3 cannot hold.
struct MultipleFixedPoints : Error {
  MultipleFixedPoints(const std::string& what, std::string a, std::string b)
      : Error(what), first(std::move(a)), second(std::move(b)) {}
  std::string first, second;
};

/// Some element has no greatest disjoint element.
struct PseudocomplementMissing : Error {
  PseudocomplementMissing(const std::string& what, std::string w)
      : Error(what), witness(std::move(w)) {}
  std::string witness;
};

// -- constructions -----------------------------------------------------------

struct NotPDL : Error {
  using Error::Error;
};

struct NotKAN : Error {
  using Error::Error;
};

struct NotCentered : Error {
  using Error::Error;
};

/// A quotient operation gave class-dependent results.  Signals an engine bug,
/// not bad input: the quotient is only formed after the axioms were verified.
struct CongruenceViolation : Error {
  using Error::Error;
};

// -- morphisms ---------------------------------------------------------------

struct SignatureMismatch : Error {
  using Error::Error;
};

struct NotAHomomorphism : Error {
  using Error::Error;
};

struct WrongCategory : Error {
  using Error::Error;
};

// -- corpus ------------------------------------------------------------------

struct BoundExceeded : Error {
  using Error::Error;
};

// -- io ----------------------------------------------------------------------

struct ParseError : Error {
  ParseError(const std::string& what, int line_, int column_)
      : Error(what), line(line_), column(column_) {}
  int line = 0;
  int column = 0;
};

struct UnknownElement : ParseError {
  using ParseError::ParseError;
};

struct DuplicateTableEntry : ParseError {
  using ParseError::ParseError;
};

struct PartialTable : ParseError {
  PartialTable(const std::string& what, int line_, int column_,
               std::vector<std::string> missing_)
      : ParseError(what, line_, column_), missing(std::move(missing_)) {}
  std::vector<std::string> missing;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace kanforge
