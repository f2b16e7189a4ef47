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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "kanforge/constructions.hpp"
#include "kanforge/errors.hpp"
#include "kanforge/variety.hpp"

using namespace kanforge;

namespace {

std::set<std::string> carrier(const Algebra& a) {
  return {a.lattice.names().begin(), a.lattice.names().end()};
}

std::vector<std::string> table_by_name(const Algebra& a,
                                       const std::vector<int>& t) {
  std::vector<std::string> out;
  for (int v : t) out.push_back(a.name_of(v));
  return out;
}

}  // namespace

TEST_CASE("diamond subalgebra of the eight-element fixture") {
  Algebra dd = fixtures::double_diamond();
  ConstructedAlgebra dia = diamond_subalgebra(dd);
  CHECK(carrier(dia.algebra) ==
        std::set<std::string>{"0", "d", "e", "f", "1"});
  REQUIRE(dia.algebra.star.has_value());
  CHECK(table_by_name(dia.algebra, *dia.algebra.star) ==
        std::vector<std::string>{"1", "0", "0", "0", "0"});
  CHECK(check_variety(dia.algebra, "stone").ok);
}

TEST_CASE("box subalgebra is the knot image of the diamond one") {
  Algebra dd = fixtures::double_diamond();
  ConstructedAlgebra boxed = box_subalgebra(dd);
  CHECK(carrier(boxed.algebra) ==
        std::set<std::string>{"0", "a", "b", "c", "1"});
  for (const char* any_kan : {"hexagon"}) {
    (void)any_kan;
    Algebra hex = fixtures::hexagon();
    ConstructedAlgebra dia = diamond_subalgebra(hex);
    ConstructedAlgebra box = box_subalgebra(hex);
    std::set<std::string> knot_image;
    for (const auto& p : dia.provenance)
      knot_image.insert(hex.name_of((*hex.knot)[p.source]));
    CHECK(knot_image == carrier(box.algebra));
  }
}

TEST_CASE("diamond carrier always contains the bounds") {
  for (const Algebra& a : {fixtures::hexagon(), fixtures::chain3(),
                           fixtures::double_diamond(), fixtures::chain4()}) {
    ConstructedAlgebra dia = diamond_subalgebra(a);
    CHECK(dia.element_index(a.lattice.bottom()) == dia.algebra.lattice.bottom());
    CHECK(dia.element_index(a.lattice.top()) == dia.algebra.lattice.top());
  }
}

TEST_CASE("theta quotient classes") {
  Algebra dd = fixtures::double_diamond();
  ConstructedAlgebra quot = theta_quotient(dd);
  CHECK(quot.algebra.size() == 5);
  CHECK(carrier(quot.algebra) ==
        std::set<std::string>{"[0]", "[d]", "[e]", "[f]", "[1]"});
  int big = quot.class_index(dd.lattice.index_of("a"));
  REQUIRE(big >= 0);
  CHECK(quot.provenance[big].members.size() == 4);  // {0, a, b, c}
  CHECK(check_variety(quot.algebra, "stone").ok);

  Algebra c3 = fixtures::chain3();
  ConstructedAlgebra q3 = theta_quotient(c3);
  CHECK(q3.algebra.size() == 2);
  // !0 = !c = 1, so 0 and c share a class; [1] is a singleton
  CHECK(q3.class_index(c3.lattice.index_of("0")) ==
        q3.class_index(c3.lattice.index_of("c")));
  int top_class = q3.class_index(c3.lattice.index_of("1"));
  CHECK(q3.provenance[top_class].members.size() == 1);
}

TEST_CASE("the class of the top is always a singleton on the fixtures") {
  for (const Algebra& a : {fixtures::hexagon(), fixtures::chain3(),
                           fixtures::double_diamond(), fixtures::chain4()}) {
    ConstructedAlgebra quot = theta_quotient(a);
    int cls = quot.class_index(a.lattice.top());
    CHECK(quot.provenance[cls].members ==
          std::vector<int>{a.lattice.top()});
  }
}

TEST_CASE("kalman of the two-element Boolean is the centered three-chain") {
  ConstructedAlgebra k = kalman(fixtures::boolean2());
  CHECK(k.algebra.size() == 3);
  CHECK(check_variety(k.algebra, "skanc").ok);

  // ~ and ! tables transcribe the three-chain fixture exactly
  int bottom_pair = k.pair_index(0, 1);  // (0,1)
  int center_pair = k.pair_index(0, 0);
  int top_pair = k.pair_index(1, 0);
  CHECK(k.algebra.lattice.bottom() == bottom_pair);
  CHECK(k.algebra.lattice.top() == top_pair);
  CHECK(*k.algebra.center == center_pair);
  CHECK((*k.algebra.neg)[center_pair] == top_pair);  // !(0,0) = (1,0)
  CHECK((*k.algebra.knot)[center_pair] == center_pair);

  Signature full = {Symbol::join, Symbol::meet, Symbol::knot, Symbol::neg,
                    Symbol::center, Symbol::zero, Symbol::one};
  CHECK(find_isomorphism(k.algebra, fixtures::chain3(), full).has_value());
}

TEST_CASE("kalman of the diamond subalgebra reproduces the nine-element figure") {
  Algebra dd = fixtures::double_diamond();
  ConstructedAlgebra k = kalman(diamond_subalgebra(dd).algebra);
  CHECK(k.algebra.size() == 9);
  CHECK(carrier(k.algebra) ==
        std::set<std::string>{"(0,1)", "(0,e)", "(0,f)", "(0,d)", "(0,0)",
                              "(d,0)", "(e,0)", "(f,0)", "(1,0)"});
  CHECK(check_variety(k.algebra, "skanc").ok);

  // the exact cover relation: two diamonds joined by a two-step stem
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [x, y] : k.algebra.lattice.covers())
    edges.emplace(k.algebra.name_of(x), k.algebra.name_of(y));
  std::set<std::pair<std::string, std::string>> expected = {
      {"(0,1)", "(0,e)"}, {"(0,1)", "(0,f)"}, {"(0,e)", "(0,d)"},
      {"(0,f)", "(0,d)"}, {"(0,d)", "(0,0)"}, {"(0,0)", "(d,0)"},
      {"(d,0)", "(e,0)"}, {"(d,0)", "(f,0)"}, {"(e,0)", "(1,0)"},
      {"(f,0)", "(1,0)"}};
  CHECK(edges == expected);
}

TEST_CASE("kalman element count equals a brute-force disjoint pair count") {
  for (const Algebra& a : {fixtures::boolean2(), fixtures::stem_diamond()}) {
    ConstructedAlgebra k = kalman(a);
    int expected = 0;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (a.lattice.meet(x, y) == a.lattice.bottom()) ++expected;
    CHECK(k.algebra.size() == expected);
  }
}

TEST_CASE("kalman requires a distributive p-algebra") {
  CHECK_THROWS_AS(kalman(fixtures::m3()), NotPDL);
}

TEST_CASE("kalman stone biconditional") {
  CHECK(check_variety(kalman(fixtures::boolean2()).algebra, "skanc").ok);
  ConstructedAlgebra k = kalman(fixtures::stem_diamond());
  CHECK(check_variety(k.algebra, "kanc").ok);
  CHECK_FALSE(check_variety(k.algebra, "skan").ok);
}

TEST_CASE("monteiro of the eight-element fixture") {
  Algebra dd = fixtures::double_diamond();
  ConstructedAlgebra m = monteiro(dd);
  CHECK(m.algebra.size() == 9);
  CHECK(carrier(m.algebra) ==
        std::set<std::string>{"(0,0)", "(0,a)", "(0,b)", "(0,c)", "(0,1)",
                              "(d,1)", "(e,1)", "(f,1)", "(1,1)"});
  CHECK(check_variety(m.algebra, "skanc").ok);

  std::set<std::pair<std::string, std::string>> edges;
  for (auto [x, y] : m.algebra.lattice.covers())
    edges.emplace(m.algebra.name_of(x), m.algebra.name_of(y));
  std::set<std::pair<std::string, std::string>> expected = {
      {"(0,0)", "(0,a)"}, {"(0,0)", "(0,b)"}, {"(0,a)", "(0,c)"},
      {"(0,b)", "(0,c)"}, {"(0,c)", "(0,1)"}, {"(0,1)", "(d,1)"},
      {"(d,1)", "(e,1)"}, {"(d,1)", "(f,1)"}, {"(e,1)", "(1,1)"},
      {"(f,1)", "(1,1)"}};
  CHECK(edges == expected);

  // spot values of the pair operations
  const FinLattice& lat = dd.lattice;
  int p = m.pair_index(lat.bottom(), lat.index_of("a"));
  CHECK((*m.algebra.knot)[p] ==
        m.pair_index(lat.index_of("f"), lat.top()));  // ~(0,a) = (~a, ~0)
  CHECK((*m.algebra.neg)[p] == m.algebra.lattice.top());  // !(0,a) = (<>!0, ~0)
  int q = m.pair_index(lat.index_of("d"), lat.top());
  CHECK((*m.algebra.neg)[q] ==
        m.pair_index(lat.bottom(), lat.index_of("c")));  // !(d,1) = (<>!d, ~d)
}

TEST_CASE("monteiro of the three-chain is a three-chain again") {
  ConstructedAlgebra m = monteiro(fixtures::chain3());
  CHECK(m.algebra.size() == 3);
  CHECK(carrier(m.algebra) ==
        std::set<std::string>{"(0,0)", "(0,1)", "(1,1)"});
  CHECK(check_variety(m.algebra, "skanc").ok);
}

TEST_CASE("monteiro neg of the center is the top") {
  for (const Algebra& a : {fixtures::chain3(), fixtures::double_diamond()}) {
    ConstructedAlgebra m = monteiro(a);
    // !(0,1) = (<>!0, ~0) = (1,1)
    int c = m.pair_index(a.lattice.bottom(), a.lattice.top());
    CHECK((*m.algebra.neg)[c] == m.algebra.lattice.top());
  }
}

TEST_CASE("monteiro element count equals a brute-force carrier count") {
  for (const Algebra& a : {fixtures::hexagon(), fixtures::chain3(),
                           fixtures::double_diamond(), fixtures::chain4()}) {
    ConstructedAlgebra m = monteiro(a);
    int expected = 0;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (diamond_of(a, x) == x && box_of(a, y) == y && a.lattice.leq(x, y))
          ++expected;
    CHECK(m.algebra.size() == expected);
  }
}

TEST_CASE("monteiro components agree with the subalgebra tables") {
  // the pair operations are computed from the source tables; the first
  // components must agree with the diamond subalgebra's own meet, the
  // second with the box subalgebra's own join
  for (const Algebra& t : {fixtures::hexagon(), fixtures::chain3(),
                           fixtures::double_diamond(), fixtures::chain4()}) {
    ConstructedAlgebra m = monteiro(t);
    ConstructedAlgebra dia = diamond_subalgebra(t);
    ConstructedAlgebra box = box_subalgebra(t);
    const FinLattice& lat = m.algebra.lattice;
    for (int p = 0; p < lat.size(); ++p)
      for (int q = 0; q < lat.size(); ++q) {
        const Provenance& meet_prov = m.provenance[lat.meet(p, q)];
        int da = dia.element_index(m.provenance[p].first);
        int db = dia.element_index(m.provenance[q].first);
        CHECK(meet_prov.first ==
              dia.provenance[dia.algebra.lattice.meet(da, db)].source);
        const Provenance& join_prov = m.provenance[lat.join(p, q)];
        int ba = box.element_index(m.provenance[p].second);
        int bb = box.element_index(m.provenance[q].second);
        CHECK(join_prov.second ==
              box.provenance[box.algebra.lattice.join(ba, bb)].source);
      }
  }
}

TEST_CASE("monteiro requires a KAN-algebra") {
  Algebra b2 = fixtures::boolean2();
  CHECK_THROWS_AS(monteiro(b2), MissingOperation);
  // a Kleene algebra that is not KAN: knot used as neg on the hexagon
  Algebra hex = fixtures::hexagon();
  Algebra broken = make_algebra("broken", hex.lattice, hex.knot, hex.knot);
  CHECK_THROWS_AS(monteiro(broken), NotKAN);
}

TEST_CASE("monteiro biconditional: skan in, skan out") {
  CHECK(check_variety(monteiro(fixtures::double_diamond()).algebra, "skan").ok);
  CHECK_FALSE(check_variety(monteiro(fixtures::hexagon()).algebra, "skan").ok);
}

TEST_CASE("center slice of the three-chain") {
  ConstructedAlgebra slice = center_slice(fixtures::chain3());
  CHECK(slice.algebra.size() == 2);
  CHECK(carrier(slice.algebra) == std::set<std::string>{"c", "1"});
  // !c(c) = !c v c = 1, !c(1) = !1 v c = c
  REQUIRE(slice.algebra.star.has_value());
  CHECK(table_by_name(slice.algebra, *slice.algebra.star) ==
        std::vector<std::string>{"1", "c"});
  CHECK(check_variety(slice.algebra, "stone").ok);

  ConstructedAlgebra from_kalman = center_slice(kalman(fixtures::boolean2()).algebra);
  CHECK(from_kalman.algebra.size() == 2);
}

TEST_CASE("center slice bounds are the center and the top") {
  for (const Algebra& a :
       {fixtures::chain3(), kalman(fixtures::stem_diamond()).algebra}) {
    ConstructedAlgebra slice = center_slice(a);
    int c = a.center ? *a.center : *find_center(a);
    CHECK(slice.algebra.lattice.bottom() == slice.element_index(c));
    CHECK(slice.algebra.lattice.top() ==
          slice.element_index(a.lattice.top()));
  }
}

TEST_CASE("center slice requires a center") {
  CHECK_THROWS_AS(center_slice(fixtures::double_diamond()), NotCentered);
}

TEST_CASE("phi maps classes to their diamond values") {
  Algebra dd = fixtures::double_diamond();
  Morphism phi = map_phi(dd);
  CHECK(phi.verified.is_isomorphism());
  ConstructedAlgebra quot = theta_quotient(dd);
  ConstructedAlgebra dia = diamond_subalgebra(dd);
  // the class of a (= {0,a,b,c}) goes to 0, [d] to d, [1] to 1
  CHECK(phi.apply(quot.class_index(dd.lattice.index_of("a"))) ==
        dia.element_index(dd.lattice.bottom()));
  CHECK(phi.apply(quot.class_index(dd.lattice.index_of("d"))) ==
        dia.element_index(dd.lattice.index_of("d")));
  CHECK(phi.apply(quot.class_index(dd.lattice.top())) ==
        dia.element_index(dd.lattice.top()));
}

TEST_CASE("h sends diamond elements into the slice by joining the center") {
  Algebra t = kalman(fixtures::boolean2()).algebra;  // centered three-chain
  Morphism h = map_h(t);
  CHECK(h.verified.is_isomorphism());
  ConstructedAlgebra dia = diamond_subalgebra(t);
  ConstructedAlgebra slice = center_slice(t);
  CHECK(h.apply(dia.element_index(t.lattice.bottom())) ==
        slice.element_index(*t.center));
  CHECK(h.apply(dia.element_index(t.lattice.top())) ==
        slice.element_index(t.lattice.top()));
}

TEST_CASE("alpha embeds a Stone algebra into the slice of its pairs") {
  Morphism alpha = map_alpha(fixtures::boolean2());
  CHECK(alpha.verified.is_isomorphism());

  // alpha preserves star on a bigger Stone algebra: the diamond subalgebra
  Algebra stone = diamond_subalgebra(fixtures::double_diamond()).algebra;
  Morphism a2 = map_alpha(stone);
  CHECK(a2.verified.is_isomorphism());
  for (const auto& [sym, ok] : a2.verified.per_symbol)
    CHECK(ok);
}

TEST_CASE("beta on the three-chain") {
  Algebra c3 = fixtures::chain3();
  Morphism beta = map_beta(c3);
  CHECK(beta.verified.is_isomorphism());
  ConstructedAlgebra slice = center_slice(c3);
  ConstructedAlgebra k = kalman(slice.algebra);
  const FinLattice& lat = c3.lattice;
  int sc = slice.element_index(lat.index_of("c"));
  int s1 = slice.element_index(lat.index_of("1"));
  CHECK(beta.apply(lat.index_of("0")) == k.pair_index(sc, s1));
  CHECK(beta.apply(lat.index_of("c")) == k.pair_index(sc, sc));
  CHECK(beta.apply(lat.index_of("1")) == k.pair_index(s1, sc));
}

TEST_CASE("delta embeds a Stone KAN-algebra into its monteiro algebra") {
  Algebra dd = fixtures::double_diamond();
  Morphism delta = map_delta(dd);
  CHECK(delta.verified.is_hom);
  CHECK(delta.verified.injective);
  CHECK_FALSE(delta.verified.surjective);  // the center is not in the image

  ConstructedAlgebra m = monteiro(dd);
  CHECK(delta.apply(dd.lattice.index_of("a")) ==
        m.pair_index(dd.lattice.bottom(), dd.lattice.index_of("a")));
  CHECK(delta.apply(dd.lattice.bottom()) == m.algebra.lattice.bottom());
  CHECK(delta.apply(dd.lattice.top()) == m.algebra.lattice.top());

  // the image is closed under every operation
  std::set<int> image(delta.mapping.begin(), delta.mapping.end());
  for (int x : image) {
    CHECK(image.count((*m.algebra.knot)[x]) == 1);
    CHECK(image.count((*m.algebra.neg)[x]) == 1);
    for (int y : image) {
      CHECK(image.count(m.algebra.lattice.join(x, y)) == 1);
      CHECK(image.count(m.algebra.lattice.meet(x, y)) == 1);
    }
  }
}

TEST_CASE("t maps monteiro pairs to kalman pairs by knotting the right side") {
  Algebra dd = fixtures::double_diamond();
  Morphism t = map_t(dd);
  CHECK(t.verified.is_isomorphism());

  ConstructedAlgebra m = monteiro(dd);
  ConstructedAlgebra dia = diamond_subalgebra(dd);
  ConstructedAlgebra k = kalman(dia.algebra);
  const FinLattice& lat = dd.lattice;
  auto expect = [&](const char* mx, const char* my, const char* kx,
                    const char* ky) {
    CHECK(t.apply(m.pair_index(lat.index_of(mx), lat.index_of(my))) ==
          k.pair_index(dia.element_index(lat.index_of(kx)),
                       dia.element_index(lat.index_of(ky))));
  };
  expect("0", "a", "0", "f");
  expect("d", "1", "d", "0");
  expect("0", "1", "0", "0");
}

TEST_CASE("functor lifts") {
  // identity lifts to the identity under every functor
  Algebra c3 = fixtures::chain3();
  Signature kan_sig = {Symbol::join, Symbol::meet, Symbol::knot, Symbol::neg,
                       Symbol::zero, Symbol::one};
  Morphism id = identity_morphism(c3, kan_sig);
  for (const char* tag : {"monteiro", "diamond", "theta", "center-slice"}) {
    Morphism lifted = lift_morphism(id, tag);
    CHECK(lifted.verified.is_isomorphism());
    for (size_t i = 0; i < lifted.mapping.size(); ++i)
      CHECK(lifted.mapping[i] == static_cast<int>(i));
  }

  Signature stone_sig = {Symbol::join, Symbol::meet, Symbol::star,
                         Symbol::zero, Symbol::one};
  Algebra b2 = with_derived_star(fixtures::boolean2());
  Morphism id2 = identity_morphism(b2, stone_sig);
  Morphism lifted = lift_morphism(id2, "kalman");
  CHECK(lifted.verified.is_isomorphism());

  // h between Stone algebras lifts through kalman to a verified hom
  Algebra t = kalman(fixtures::boolean2()).algebra;
  Morphism h = map_h(t);
  Morphism kh = lift_morphism(h, "kalman");
  CHECK(kh.verified.is_hom);
  CHECK(kh.verified.is_isomorphism());
}

TEST_CASE("lifting a non-homomorphism or wrong-category map fails") {
  Algebra c3 = fixtures::chain3();
  // constant-to-top map is not a homomorphism
  std::vector<int> to_top(c3.size(), c3.lattice.top());
  Morphism bad{c3, c3, to_top, {}, {}};
  CHECK_THROWS_AS(lift_morphism(bad, "monteiro"), NotAHomomorphism);

  // center-slice needs centered domains
  Algebra dd = fixtures::double_diamond();
  Signature kan_sig = {Symbol::join, Symbol::meet, Symbol::knot, Symbol::neg,
                       Symbol::zero, Symbol::one};
  Morphism id = identity_morphism(dd, kan_sig);
  CHECK_THROWS_AS(lift_morphism(id, "center-slice"), WrongCategory);
}
