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
#include <vector>

#include "kanforge/algebra.hpp"

namespace kanforge {

/// The strongest variety the algebra passes, tried in the order skanc, skan,
/// kanc, kan, kleene, stone, pdl; "none" when nothing applies.
std::string detect_variety(const Algebra& a);

struct BatteryCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct BatteryReport {
  std::string algebra;
  std::string detected;
  bool ok = false;
  std::vector<BatteryCheck> checks;

  /// Deterministic rendering, one line per check.
  std::string to_string() const;
};

/// Detects the strongest variety, then runs every applicable theorem check:
/// the derived-law suites, the characterizations, each construction's
/// membership claim, the construction biconditionals, and the canonical
/// isomorphisms/embeddings.
BatteryReport run_battery(const Algebra& a);

}  // namespace kanforge
