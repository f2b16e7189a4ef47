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

#include "kanforge/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "kanforge/errors.hpp"

namespace kanforge {

int FinLattice::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

FinLattice FinLattice::build(const PosetInput& input) {
  const int n = static_cast<int>(input.elements.size());
  if (n == 0) throw NoBounds("empty element list");

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    auto [_, fresh] = index.emplace(input.elements[i], i);
    if (!fresh)
      throw Error("duplicate element name '" + input.elements[i] + "'");
  }

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : input.relation) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end())
      throw Error("order clause references undeclared element '" + lo + "'");
    if (b == index.end())
      throw Error("order clause references undeclared element '" + hi + "'");
    leq[a->second][b->second] = true;
  }
  return from_order(input.elements, std::move(leq));
}

FinLattice FinLattice::from_order(std::vector<std::string> names,
                                  std::vector<std::vector<bool>> leq) {
  FinLattice lat;
  const int n = static_cast<int>(names.size());
  if (n == 0) throw NoBounds("empty element list");

  for (int i = 0; i < n; ++i) leq[i][i] = true;
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i])
        throw NotAPartialOrder("order has a cycle through '" + names[i] +
                               "' and '" + names[j] + "'");

  int bottom = -1, top = -1;
  for (int i = 0; i < n; ++i) {
    bool is_bottom = true, is_top = true;
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) is_bottom = false;
      if (!leq[j][i]) is_top = false;
    }
    if (is_bottom) bottom = i;
    if (is_top) top = i;
  }
  if (bottom < 0 || top < 0)
    throw NoBounds(bottom < 0 ? "order has no least element"
                              : "order has no greatest element");

  std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
  std::vector<int> bounds;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      bounds.clear();
      for (int u = 0; u < n; ++u)
        if (leq[x][u] && leq[y][u]) bounds.push_back(u);
      int lub = -1;
      for (int u : bounds) {
        bool least = true;
        for (int v : bounds)
          if (!leq[u][v]) {
            least = false;
            break;
          }
        if (least) {
          lub = u;
          break;
        }
      }
      if (lub < 0)
        throw NotALattice("pair (" + names[x] + ", " + names[y] +
                              ") has no unique least upper bound",
                          names[x], names[y]);
      join[x][y] = join[y][x] = lub;

      bounds.clear();
      for (int u = 0; u < n; ++u)
        if (leq[u][x] && leq[u][y]) bounds.push_back(u);
      int glb = -1;
      for (int u : bounds) {
        bool greatest = true;
        for (int v : bounds)
          if (!leq[v][u]) {
            greatest = false;
            break;
          }
        if (greatest) {
          glb = u;
          break;
        }
      }
      if (glb < 0)
        throw NotALattice("pair (" + names[x] + ", " + names[y] +
                              ") has no unique greatest lower bound",
                          names[x], names[y]);
      meet[x][y] = meet[y][x] = glb;
    }
  }

  lat.names_ = std::move(names);
  lat.leq_ = std::move(leq);
  lat.join_ = std::move(join);
  lat.meet_ = std::move(meet);
  lat.bottom_ = bottom;
  lat.top_ = top;
  return lat;
}

std::vector<std::pair<int, int>> FinLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq_[x][y]) continue;
      bool covered = true;
      for (int z = 0; z < n; ++z)
        if (z != x && z != y && leq_[x][z] && leq_[z][y]) {
          covered = false;
          break;
        }
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

std::optional<DistributivityWitness> FinLattice::distributivity_failure()
    const {
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet_[x][join_[y][z]] != join_[meet_[x][y]][meet_[x][z]])
          return DistributivityWitness{x, y, z};
  return std::nullopt;
}

std::optional<int> FinLattice::pseudocomplement(int x) const {
  std::vector<int> disjoint;
  for (int y = 0; y < size(); ++y)
    if (meet_[x][y] == bottom_) disjoint.push_back(y);
  for (int m : disjoint) {
    bool greatest = true;
    for (int y : disjoint)
      if (!leq_[y][m]) {
        greatest = false;
        break;
      }
    if (greatest) return m;
  }
  return std::nullopt;
}

std::vector<int> FinLattice::join_irreducibles() const {
  std::vector<int> lower_covers(size(), 0);
  for (auto [x, y] : covers()) lower_covers[y]++;
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (x != bottom_ && lower_covers[x] == 1) out.push_back(x);
  return out;
}

}  // namespace kanforge
