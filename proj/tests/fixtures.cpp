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

#include "fixtures.hpp"

using kanforge::Algebra;
using kanforge::FinLattice;
using kanforge::PosetInput;

namespace fixtures {

namespace {

FinLattice lattice(std::vector<std::string> elements,
                   std::vector<std::pair<std::string, std::string>> covers) {
  return FinLattice::build(PosetInput{std::move(elements), std::move(covers)});
}

std::vector<int> table(const FinLattice& lat,
                       std::vector<std::string> images) {
  std::vector<int> t;
  t.reserve(images.size());
  for (const auto& name : images) t.push_back(lat.index_of(name));
  return t;
}

}  // namespace

Algebra hexagon() {
  FinLattice lat = lattice({"0", "a", "b", "c", "d", "1"},
                           {{"0", "a"},
                            {"a", "b"},
                            {"a", "c"},
                            {"b", "d"},
                            {"c", "d"},
                            {"d", "1"}});
  auto knot = table(lat, {"1", "d", "c", "b", "a", "0"});
  auto neg = table(lat, {"1", "1", "c", "b", "a", "0"});
  return kanforge::make_algebra("hexagon", std::move(lat), std::move(knot),
                                std::move(neg));
}

Algebra chain3() {
  FinLattice lat = lattice({"0", "c", "1"}, {{"0", "c"}, {"c", "1"}});
  auto knot = table(lat, {"1", "c", "0"});
  auto neg = table(lat, {"1", "1", "0"});
  int center = lat.index_of("c");
  return kanforge::make_algebra("chain3", std::move(lat), std::move(knot),
                                std::move(neg), std::nullopt, center);
}

Algebra double_diamond() {
  FinLattice lat = lattice({"0", "a", "b", "c", "d", "e", "f", "1"},
                           {{"0", "a"},
                            {"0", "b"},
                            {"a", "c"},
                            {"b", "c"},
                            {"c", "d"},
                            {"d", "e"},
                            {"d", "f"},
                            {"e", "1"},
                            {"f", "1"}});
  auto knot = table(lat, {"1", "f", "e", "d", "c", "b", "a", "0"});
  auto neg = table(lat, {"1", "1", "1", "1", "c", "b", "a", "0"});
  return kanforge::make_algebra("double_diamond", std::move(lat),
                                std::move(knot), std::move(neg));
}

Algebra boolean2() {
  return kanforge::make_algebra("boolean2", lattice({"0", "1"}, {{"0", "1"}}));
}

Algebra m3() {
  return kanforge::make_algebra(
      "m3", lattice({"0", "p", "q", "r", "1"}, {{"0", "p"},
                                                {"0", "q"},
                                                {"0", "r"},
                                                {"p", "1"},
                                                {"q", "1"},
                                                {"r", "1"}}));
}

Algebra stem_diamond() {
  return kanforge::make_algebra(
      "stem_diamond",
      lattice({"0", "a", "b", "t", "1"},
              {{"0", "a"}, {"0", "b"}, {"a", "t"}, {"b", "t"}, {"t", "1"}}));
}

Algebra chain4() {
  FinLattice lat =
      lattice({"0", "x", "y", "1"}, {{"0", "x"}, {"x", "y"}, {"y", "1"}});
  auto knot = table(lat, {"1", "y", "x", "0"});
  auto neg = table(lat, {"1", "1", "x", "0"});
  return kanforge::make_algebra("chain4", std::move(lat), std::move(knot),
                                std::move(neg));
}

std::string fixture_path(const std::string& name) {
  return std::string(KANFORGE_FIXTURE_DIR) + "/" + name;
}

}  // namespace fixtures
