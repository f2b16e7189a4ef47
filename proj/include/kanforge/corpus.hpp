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

/// A finite poset on indices 0..n-1 given by its reflexive-transitive order.
struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> leq;
};

/// Default enumeration bounds; KANFORGE_MAX_SIZE raises both.
int max_poset_size();
int max_operator_lattice_size();

/// All posets on n elements up to isomorphism, in deterministic order.
/// Throws BoundExceeded past the configured bound.
std::vector<Poset> enumerate_posets(int n);

/// Lattice of down-closed subsets ordered by inclusion.  Always bounded and
/// distributive.  Elements are named by their members (letters a, b, c, ...),
/// the empty set as "0".
FinLattice downset_lattice(const Poset& p, const std::string& name_prefix = "");

struct EnumOptions {
  bool dedup = false;  // keep one representative per isomorphism class
  int max_size = 0;    // 0 means the configured default
};

/// All operator structures on the lattice passing the named variety check:
/// knot tables for "kleene", (knot, neg) pairs for kan/kanc/skan/skanc.
/// Candidates are cut down by necessary conditions (knot an order-reversing
/// involution, neg determined by its antitone values on join-irreducibles)
/// and the survivors re-checked with the full axiom suite.  Deterministic
/// lexicographic order.  Throws BoundExceeded when the lattice is larger than
/// the configured bound.
std::vector<Algebra> enumerate_operator_pairs(const FinLattice& lattice,
                                              const std::string& variety,
                                              const EnumOptions& options = {});

struct CorpusEntry {
  Algebra algebra;  // passes "kan"; carries its center when one exists
  bool skan = false;
  bool kanc = false;
  bool skanc = false;
};

/// Every distributive lattice generated from posets with at most
/// `max_irreducibles` elements, plus every KAN structure on each, iso-deduped,
/// flagged with the stronger varieties it satisfies.
struct Corpus {
  std::vector<FinLattice> lattices;
  std::vector<CorpusEntry> entries;
};

Corpus build_default_corpus(int max_irreducibles = 4);

/// Writes every corpus member as a NAME.alg document under dir (created if
/// absent).  Returns the number of files written.
int write_corpus(const Corpus& corpus, const std::string& dir);

}  // namespace kanforge
