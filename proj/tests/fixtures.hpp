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

namespace fixtures {

// Built programmatically, independent of the parser; the .alg files under
// fixtures/ must parse to structurally equal algebras.

/// Six-element KAN-algebra (0 < a < {b,c} < d < 1) failing stone-kan at b.
kanforge::Algebra hexagon();

/// Centered Stone KAN-algebra on the chain 0 < c < 1.
kanforge::Algebra chain3();

/// Eight-element Stone KAN-algebra without a center.
kanforge::Algebra double_diamond();

/// Two-element Boolean lattice, no unary tables.
kanforge::Algebra boolean2();

/// Non-distributive diamond 0 < {p,q,r} < 1.
kanforge::Algebra m3();

/// Distributive p-algebra 0 < {a,b} < t < 1 that fails the Stone identity.
kanforge::Algebra stem_diamond();

/// Four-element chain with the order-reversing knot; a Stone KAN-algebra
/// without a center.
kanforge::Algebra chain4();

std::string fixture_path(const std::string& name);

}  // namespace fixtures
