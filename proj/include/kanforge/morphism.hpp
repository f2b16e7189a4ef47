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

#include "kanforge/algebra.hpp"

namespace kanforge {

struct PreservationRecord {
  std::vector<std::pair<std::string, bool>> per_symbol;
  bool is_hom = false;
  bool injective = false;
  bool surjective = false;

  bool is_isomorphism() const { return is_hom && injective && surjective; }
};

/// A total element mapping between two algebras, bundled with its eagerly
/// computed verification record.  Domain and codomain are stored by value;
/// composition requires structural equality at the junction.
struct Morphism {
  Algebra domain, codomain;
  std::vector<int> mapping;
  Signature signature;
  PreservationRecord verified;

  int apply(int x) const { return mapping[x]; }
};

/// Per-symbol exhaustive verification.  Throws SignatureMismatch when the
/// signature is not available on both algebras, Error when the mapping is not
/// a total in-range table.
PreservationRecord check_homomorphism(const std::vector<int>& mapping,
                                      const Algebra& dom, const Algebra& cod,
                                      const Signature& signature);

/// Bundles a mapping with its verification record (computed here).
Morphism make_morphism(Algebra dom, Algebra cod, std::vector<int> mapping,
                       Signature signature);

Morphism identity_morphism(const Algebra& a, Signature signature);

/// g after f.  Requires f.codomain structurally equal to g.domain.
Morphism compose(const Morphism& g, const Morphism& f);

/// True when the two morphisms have structurally equal endpoints and the same
/// mapping.
bool same_morphism(const Morphism& a, const Morphism& b);

/// Backtracking search over order-compatible candidates with invariant
/// pruning; returns the lexicographically least signature-preserving
/// isomorphism, or absent.  Returns absent as well when a signature symbol is
/// missing from either side.
std::optional<Morphism> find_isomorphism(const Algebra& a, const Algebra& b,
                                         const Signature& signature);

/// All signature-preserving homomorphisms a -> b in deterministic order, at
/// most `limit`.  Candidates are generated from images of the domain's
/// join-irreducibles and verified exhaustively.
std::vector<Morphism> enumerate_homomorphisms(const Algebra& a,
                                              const Algebra& b,
                                              const Signature& signature,
                                              size_t limit);

}  // namespace kanforge
