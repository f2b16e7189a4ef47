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

#include "kanforge/algebra.hpp"

#include "kanforge/errors.hpp"

namespace kanforge {

std::string symbol_name(Symbol s) {
  switch (s) {
    case Symbol::join: return "join";
    case Symbol::meet: return "meet";
    case Symbol::zero: return "0";
    case Symbol::one: return "1";
    case Symbol::knot: return "knot";
    case Symbol::neg: return "neg";
    case Symbol::star: return "star";
    case Symbol::center: return "center";
  }
  return "?";
}

Signature lattice_signature() {
  return {Symbol::join, Symbol::meet, Symbol::zero, Symbol::one};
}

bool Algebra::has(Symbol s) const {
  switch (s) {
    case Symbol::join:
    case Symbol::meet:
    case Symbol::zero:
    case Symbol::one: return true;
    case Symbol::knot: return knot.has_value();
    case Symbol::neg: return neg.has_value();
    case Symbol::star: return star.has_value();
    case Symbol::center: return center.has_value();
  }
  return false;
}

Signature Algebra::symbols() const {
  Signature sig = lattice_signature();
  if (knot) sig.insert(Symbol::knot);
  if (neg) sig.insert(Symbol::neg);
  if (star) sig.insert(Symbol::star);
  if (center) sig.insert(Symbol::center);
  return sig;
}

int Algebra::apply_unary(Symbol s, int x) const {
  switch (s) {
    case Symbol::knot:
      if (!knot) break;
      return (*knot)[x];
    case Symbol::neg:
      if (!neg) break;
      return (*neg)[x];
    case Symbol::star:
      if (!star) break;
      return (*star)[x];
    default: break;
  }
  throw MissingOperation(
      "algebra '" + name + "' has no " + symbol_name(s) + " table",
      symbol_name(s));
}

bool Algebra::structurally_equal(const Algebra& other) const {
  return lattice == other.lattice && knot == other.knot && neg == other.neg &&
         star == other.star && center == other.center;
}

namespace {

void validate_table(const std::vector<int>& table, int n,
                    const std::string& what) {
  if (static_cast<int>(table.size()) != n)
    throw Error(what + " table is not total (" +
                std::to_string(table.size()) + " entries for " +
                std::to_string(n) + " elements)");
  for (int v : table)
    if (v < 0 || v >= n)
      throw Error(what + " table has an out-of-range entry");
}

}  // namespace

Algebra make_algebra(std::string name, FinLattice lattice,
                     std::optional<std::vector<int>> knot,
                     std::optional<std::vector<int>> neg,
                     std::optional<std::vector<int>> star,
                     std::optional<int> center) {
  const int n = lattice.size();
  if (knot) validate_table(*knot, n, "knot");
  if (neg) validate_table(*neg, n, "neg");
  if (star) validate_table(*star, n, "star");
  if (center && (*center < 0 || *center >= n))
    throw Error("center does not name a declared element");

  Algebra a;
  a.name = std::move(name);
  a.lattice = std::move(lattice);
  a.knot = std::move(knot);
  a.neg = std::move(neg);
  a.star = std::move(star);
  a.center = center;
  if (a.knot && a.neg) {
    std::vector<int> dia(n), box(n);
    for (int x = 0; x < n; ++x) {
      dia[x] = (*a.knot)[(*a.neg)[x]];
      box[x] = (*a.neg)[(*a.knot)[x]];
    }
    a.diamond = std::move(dia);
    a.box = std::move(box);
  }
  return a;
}

std::vector<int> derive_star_table(const FinLattice& lattice) {
  std::vector<int> table(lattice.size());
  for (int x = 0; x < lattice.size(); ++x) {
    auto pc = lattice.pseudocomplement(x);
    if (!pc)
      throw PseudocomplementMissing(
          "element '" + lattice.name_of(x) +
              "' has no greatest disjoint element",
          lattice.name_of(x));
    table[x] = *pc;
  }
  return table;
}

Algebra with_derived_star(const Algebra& a) {
  Algebra copy = a;
  copy.star = derive_star_table(a.lattice);
  return copy;
}

}  // namespace kanforge
