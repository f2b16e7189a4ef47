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
#include <utility>
#include <vector>

namespace kanforge {

/// Raw order description: element names plus a list of (x, y) pairs meaning
/// x <= y.  The relation may be any subset whose reflexive-transitive closure
/// is a lattice order; covers and full orders are both fine.
struct PosetInput {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relation;
};

struct DistributivityWitness {
  int x, y, z;  // x ^ (y v z) != (x ^ y) v (x ^ z)
};

/// A finite bounded lattice.  Elements are referenced by index 0..n-1; names
/// are surface syntax only.  Immutable after construction and validated
/// eagerly: every pair has a unique least upper bound and greatest lower
/// bound, and global bottom/top exist.
class FinLattice {
 public:
  FinLattice() = default;

  /// Build from a raw order description.  Takes the reflexive-transitive
  /// closure first.  Throws NotAPartialOrder, NoBounds or NotALattice.
  static FinLattice build(const PosetInput& input);

  /// Build from names and an order matrix (closure is taken).  Same checks.
  static FinLattice from_order(std::vector<std::string> names,
                               std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name_of(int x) const { return names_[x]; }

  /// Index of a named element, or -1.
  int index_of(const std::string& name) const;

  bool leq(int x, int y) const { return leq_[x][y]; }
  int join(int x, int y) const { return join_[x][y]; }
  int meet(int x, int y) const { return meet_[x][y]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Exactly the pairs (x, y) with x < y and nothing strictly between,
  /// ordered by (x, y) index.
  std::vector<std::pair<int, int>> covers() const;

  /// First failing triple in index order, or nullopt when distributive.
  std::optional<DistributivityWitness> distributivity_failure() const;
  bool is_distributive() const { return !distributivity_failure().has_value(); }

  /// max{y : x ^ y = 0} when that set has a maximum; absent otherwise.
  std::optional<int> pseudocomplement(int x) const;

  /// Non-bottom elements with exactly one lower cover.
  std::vector<int> join_irreducibles() const;

  bool operator==(const FinLattice& other) const {
    return names_ == other.names_ && leq_ == other.leq_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> join_, meet_;
  int bottom_ = -1, top_ = -1;
};

}  // namespace kanforge
