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
#include <random>

#include "fixtures.hpp"
#include "kanforge/errors.hpp"
#include "kanforge/suites.hpp"
#include "kanforge/variety.hpp"

using namespace kanforge;

TEST_CASE("evaluate by table lookup") {
  Algebra dd = fixtures::double_diamond();
  Term t = dia(v("a"));
  // <>a rewrites to ~!a = ~1 = 0
  CHECK(evaluate(t, dd, {{"a", dd.lattice.index_of("a")}}) ==
        dd.lattice.bottom());

  Algebra hex = fixtures::hexagon();
  for (int e = 0; e < hex.size(); ++e)
    CHECK(evaluate(join(v("x"), zero()), hex, {{"x", e}}) == e);

  // !(x ^ !y) at x=b, y=c: !c = b, b ^ b = b, !b = c
  CHECK(evaluate(neg(meet(v("x"), neg(v("y")))), hex,
                 {{"x", hex.lattice.index_of("b")},
                  {"y", hex.lattice.index_of("c")}}) ==
        hex.lattice.index_of("c"));
}

TEST_CASE("evaluation errors") {
  Algebra b2 = fixtures::boolean2();  // no unary tables
  CHECK_THROWS_AS(evaluate(knot(v("x")), b2, {{"x", 0}}), MissingOperation);
  CHECK_THROWS_AS(evaluate(center_c(), b2, {}), MissingOperation);
  Algebra hex = fixtures::hexagon();
  CHECK_THROWS_AS(evaluate(join(v("x"), v("y")), hex, {{"x", 0}}),
                  UnboundVariable);
}

TEST_CASE("identity checking with deterministic counterexamples") {
  Algebra hex = fixtures::hexagon();

  Term x = v("x");
  CHECK(check_identity(make_identity("K1", knot(knot(x)), x), hex).holds);
  CHECK(check_identity(make_identity("refl", x, x), hex).holds);

  Identity stone_kan =
      make_identity("stone-kan", join(neg(x), neg(neg(x))), one());
  CheckResult r = check_identity(stone_kan, hex);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  // first failure in element-index order: x = b, where !b v !!b = d
  CHECK(r.counterexample->bindings ==
        std::vector<std::pair<std::string, std::string>>{{"x", "b"}});
}

TEST_CASE("quasi-identity checking") {
  Algebra dd = fixtures::double_diamond();
  Term x = v("x"), y = v("y");

  QuasiIdentity mdp = make_quasi(
      "mdp", {Equation{box(x), box(y)}, Equation{dia(x), dia(y)}},
      Equation{x, y});
  CHECK(check_quasi_identity(mdp, dd).holds);

  Algebra hex = fixtures::hexagon();
  for (const auto& law : suite_by_name("auxiliar1").laws)
    CHECK(check_law(law, hex).holds);

  // vacuous hypothesis: nothing to test, so the quasi-identity holds
  QuasiIdentity vacuous =
      make_quasi("vacuous", {Equation{zero(), one()}}, Equation{x, y});
  CHECK(check_quasi_identity(vacuous, hex).holds);
  CHECK(check_quasi_identity(vacuous, dd).holds);
}

TEST_CASE("derived operator rewriting agrees with the cached tables") {
  for (const Algebra& a : {fixtures::hexagon(), fixtures::chain3(),
                           fixtures::double_diamond(), fixtures::chain4()}) {
    for (int e = 0; e < a.size(); ++e) {
      CHECK(evaluate(dia(v("x")), a, {{"x", e}}) == diamond_of(a, e));
      CHECK(evaluate(box(v("x")), a, {{"x", e}}) == box_of(a, e));
    }
  }
}

TEST_CASE("verdicts are independent of assignment order") {
  // randomized-order re-run must agree with the deterministic scan
  Algebra hex = fixtures::hexagon();
  std::mt19937 rng(20240917);

  auto randomized_check = [&](const Identity& id) {
    const size_t k = id.variables.size();
    std::vector<std::vector<int>> assignments;
    std::vector<int> values(k, 0);
    while (true) {
      assignments.push_back(values);
      size_t pos = k;
      while (pos > 0) {
        if (++values[pos - 1] < hex.size()) break;
        values[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    std::shuffle(assignments.begin(), assignments.end(), rng);
    for (const auto& vals : assignments) {
      std::vector<std::pair<std::string, int>> env;
      for (size_t i = 0; i < k; ++i) env.emplace_back(id.variables[i], vals[i]);
      if (evaluate(id.eq.lhs, hex, env) != evaluate(id.eq.rhs, hex, env))
        return false;
    }
    return true;
  };

  Term x = v("x"), y = v("y");
  std::vector<Identity> samples = {
      make_identity("stone-kan", join(neg(x), neg(neg(x))), one()),
      make_identity("K2", knot(join(x, y)), meet(knot(x), knot(y))),
      make_identity("broken", knot(x), neg(x)),
  };
  for (const auto& id : samples)
    CHECK(check_identity(id, hex).holds == randomized_check(id));
}

TEST_CASE("builtin suite catalog") {
  CHECK(suite_by_name("prop1").laws.size() == 8);
  CHECK(suite_by_name("prop3").laws.size() == 9);
  CHECK(suite_by_name("kan-axioms").laws.size() == 5);
  CHECK(suite_by_name("kleene").laws.size() == 3);
  const Suite& centered = suite_by_name("centered");
  CHECK(centered.laws.size() == 5);
  CHECK(centered.required.count(Symbol::center) == 1);
  CHECK(suite_by_name("lemma-aux").laws.size() == 4);
  CHECK_THROWS_AS(suite_by_name("nonsense"), UnknownSuite);

  // contract: these names exist
  for (const char* name :
       {"kleene", "kan-axioms", "stone", "stone-kan", "pdl", "centered",
        "prop1", "prop3", "modal-normal", "moisil", "lemma-aux", "lemma-t",
        "lemma5.8", "auxiliar1", "lemma2.23"})
    CHECK_NOTHROW(suite_by_name(name));
}

TEST_CASE("suites requiring a missing operation refuse to run") {
  Algebra b2 = fixtures::boolean2();
  CHECK_THROWS_AS(run_suite(suite_by_name("kleene"), b2), MissingOperation);
  Algebra dd = fixtures::double_diamond();  // no center
  CHECK_THROWS_AS(run_suite(suite_by_name("centered"), dd), MissingOperation);
}

TEST_CASE("derived-law suites hold on every KAN fixture") {
  for (const Algebra& a : {fixtures::hexagon(), fixtures::chain3(),
                           fixtures::double_diamond(), fixtures::chain4()}) {
    for (const char* s : {"prop1", "prop3", "moisil", "lemma-t", "lemma5.8",
                          "auxiliar1", "lemma2.23", "modal-normal",
                          "lemma-aux"}) {
      SuiteResult r = run_suite(suite_by_name(s), a);
      INFO(a.name, " / ", s);
      CHECK(r.ok);
    }
  }
  CHECK(run_suite(suite_by_name("centered"), fixtures::chain3()).ok);
}

TEST_CASE("pseudocomplement suites run against a derived star table") {
  Algebra stem = with_derived_star(fixtures::stem_diamond());
  CHECK(run_suite(suite_by_name("pdl"), stem).ok);
  SuiteResult stone = run_suite(suite_by_name("stone"), stem);
  CHECK_FALSE(stone.ok);

  Algebra b2 = with_derived_star(fixtures::boolean2());
  CHECK(run_suite(suite_by_name("pdl"), b2).ok);
  CHECK(run_suite(suite_by_name("stone"), b2).ok);

  CHECK_THROWS_AS(run_suite(suite_by_name("pdl"), fixtures::stem_diamond()),
                  MissingOperation);
}

TEST_CASE("law statements render in ascii") {
  const Suite& kan = suite_by_name("kan-axioms");
  CHECK(kan.laws[1].statement() == "!(x v y) = !x ^ !y");
  const Suite& kleene = suite_by_name("kleene");
  CHECK(kleene.laws[0].statement() == "~~x = x");
}
