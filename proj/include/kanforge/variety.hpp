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
#include <string>
#include <vector>

#include "kanforge/suites.hpp"

namespace kanforge {

struct AxiomResult {
  std::string name;
  bool holds = false;
  std::optional<Counterexample> counterexample;
  std::string detail;
};

struct VarietyReport {
  std::string variety;
  std::string algebra;
  bool ok = false;  // conjunction of the per-axiom verdicts
  std::vector<AxiomResult> axioms;
  std::optional<int> found_center;
  std::optional<std::vector<int>> derived_star;
};

/// Recognized variety names, strongest-within-signature last: pdl, stone,
/// kleene, kan, kanc, skan, skanc.
const std::vector<std::string>& variety_names();

/// Checks every axiom of the named variety.  For pdl/stone the star table is
/// computed from the order (a user-supplied one is validated against it); for
/// kanc/skanc a missing declared center is searched for first.  Throws
/// MissingOperation when the algebra lacks a table the variety needs and
/// UnknownVariety for unrecognized names.
VarietyReport check_variety(const Algebra& a, const std::string& variety);

/// The unique fixed point of knot if there is exactly one; absent if none.
/// Throws MultipleFixedPoints when two are found (Kleene then fails anyway).
std::optional<int> find_center(const Algebra& a);

/// Pointwise biconditional: ~e = e iff (<>e = 0 and []e = 1).
bool check_center_characterization(const Algebra& a);

struct QwpReport {
  bool ok = false;
  bool max_ok = false;  // !x = max{y : x ^ y <= ~x} for every x
  bool wp_ok = false;   // !(x ^ y) = 1  iff  !!x <= !y, for every pair
  std::string detail;
};

/// Checks that neg is the quasi weak pseudocomplementation of knot and that
/// the weak-pseudocomplementation biconditional holds.
QwpReport check_qwp(const Algebra& a);

/// Derived-operator table lookups; throw MissingOperation.
int diamond_of(const Algebra& a, int x);
int box_of(const Algebra& a, int x);

}  // namespace kanforge
