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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kanforge/lattice.hpp"

namespace kanforge {

/// Operation and constant symbols of the working signature.
enum class Symbol { join, meet, zero, one, knot, neg, star, center };

using Signature = std::set<Symbol>;

std::string symbol_name(Symbol s);

/// The lattice operations and bounds; always available.
Signature lattice_signature();

/// A finite bounded lattice with optional unary operation tables and an
/// optional distinguished center element.  knot is the De Morgan negation ~,
/// neg the intuitionistic negation !, star the pseudocomplement *.  The
/// derived operators <> (knot of neg) and [] (neg of knot) are cached when
/// both base tables are present.
struct Algebra {
  std::string name;
  FinLattice lattice;
  std::optional<std::vector<int>> knot;
  std::optional<std::vector<int>> neg;
  std::optional<std::vector<int>> star;
  std::optional<int> center;

  // derived, filled by make_algebra
  std::optional<std::vector<int>> diamond;
  std::optional<std::vector<int>> box;

  int size() const { return lattice.size(); }
  const std::string& name_of(int x) const { return lattice.name_of(x); }

  bool has(Symbol s) const;
  Signature symbols() const;

  /// Table lookup for a unary symbol.  Throws MissingOperation.
  int apply_unary(Symbol s, int x) const;

  /// Same element names, same order, same tables, same center.
  bool structurally_equal(const Algebra& other) const;
};

/// Validates table totality and range, checks a declared center exists, and
/// fills the derived diamond/box tables.
Algebra make_algebra(std::string name, FinLattice lattice,
                     std::optional<std::vector<int>> knot = std::nullopt,
                     std::optional<std::vector<int>> neg = std::nullopt,
                     std::optional<std::vector<int>> star = std::nullopt,
                     std::optional<int> center = std::nullopt);

/// Copy of `a` with the star table replaced by the computed pseudocomplement
/// table.  Throws PseudocomplementMissing with the witness element.
Algebra with_derived_star(const Algebra& a);

/// Computed pseudocomplement table; throws PseudocomplementMissing.
std::vector<int> derive_star_table(const FinLattice& lattice);

}  // namespace kanforge
