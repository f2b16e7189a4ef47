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

#include "kanforge/suites.hpp"

#include "kanforge/errors.hpp"

namespace kanforge {

namespace {

Law law(std::string name, std::vector<Identity> ids,
        std::vector<QuasiIdentity> qis = {}) {
  return Law{std::move(name), std::move(ids), std::move(qis)};
}

Signature sig_knot() { return {Symbol::knot}; }
Signature sig_neg() { return {Symbol::neg}; }
Signature sig_kn() { return {Symbol::knot, Symbol::neg}; }
Signature sig_knc() { return {Symbol::knot, Symbol::neg, Symbol::center}; }
Signature sig_star() { return {Symbol::star}; }

std::vector<Suite> build_catalog() {
  Term x = v("x"), y = v("y");

  std::vector<Suite> catalog;

  catalog.push_back(Suite{
      "kleene",
      "De Morgan involution axioms (K1)-(K3)",
      sig_knot(),
      {
          law("K1", {make_identity("K1", knot(knot(x)), x)}),
          law("K2", {make_identity("K2", knot(join(x, y)),
                                   meet(knot(x), knot(y)))}),
          law("K3", {make_leq_identity("K3", meet(x, knot(x)),
                                       join(y, knot(y)))}),
      }});

  catalog.push_back(Suite{
      "kan-axioms",
      "intuitionistic negation axioms (N1)-(N5)",
      sig_kn(),
      {
          law("N1", {make_identity("N1", neg(meet(x, neg(meet(x, y)))),
                                   neg(meet(x, neg(y))))}),
          law("N2",
              {make_identity("N2", neg(join(x, y)), meet(neg(x), neg(y)))}),
          law("N3", {make_identity("N3", meet(x, knot(x)), meet(x, neg(x)))}),
          law("N4", {make_leq_identity("N4", knot(x), neg(x))}),
          law("N5", {make_identity("N5", neg(meet(x, y)),
                                   neg(meet(knot(neg(x)), y)))}),
      }});

  catalog.push_back(Suite{
      "pdl",
      "pseudocomplement defining conditions",
      sig_star(),
      {
          law("pdl.disjoint",
              {make_identity("pdl.disjoint", meet(x, star(x)), zero())}),
          law("pdl.greatest", {},
              {make_quasi("pdl.greatest", {Equation{meet(x, y), zero()}},
                          leq_equation(y, star(x)))}),
      }});

  catalog.push_back(Suite{
      "stone",
      "Stone identity for the pseudocomplement",
      sig_star(),
      {
          law("stone",
              {make_identity("stone", join(star(x), star(star(x))), one())}),
      }});

  catalog.push_back(Suite{
      "stone-kan",
      "Stone identity for the intuitionistic negation",
      sig_neg(),
      {
          law("stone-kan",
              {make_identity("stone-kan", join(neg(x), neg(neg(x))), one())}),
      }});

  catalog.push_back(Suite{
      "prop1",
      "basic derived laws of the negations and modal operators",
      sig_kn(),
      {
          law("prop1.1", {make_identity("prop1.1a", neg(one()), zero()),
                          make_identity("prop1.1b", neg(zero()), one())}),
          law("prop1.2", {},
              {make_quasi("prop1.2", {leq_equation(x, y)},
                          leq_equation(neg(y), neg(x)))}),
          law("prop1.3",
              {make_identity("prop1.3a", neg(meet(x, knot(x))), one()),
               make_identity("prop1.3b", neg(meet(x, neg(x))), one())}),
          law("prop1.4", {make_identity("prop1.4a", dia(zero()), zero()),
                          make_identity("prop1.4b", box(one()), one())}),
          law("prop1.5", {make_identity("prop1.5a", dia(one()), one()),
                          make_identity("prop1.5b", box(zero()), zero())}),
          law("prop1.6", {make_leq_identity("prop1.6a", dia(x), x),
                          make_leq_identity("prop1.6b", x, box(x))}),
          law("prop1.7", {make_leq_identity("prop1.7a", dia(x), neg(neg(x))),
                          make_leq_identity("prop1.7b", neg(neg(x)), box(x))}),
          law("prop1.8", {make_identity("prop1.8a", neg(dia(x)), neg(x)),
                          make_identity("prop1.8b", box(neg(x)), neg(x))}),
      }});

  catalog.push_back(Suite{
      "prop3",
      "idempotence, distribution and decomposition laws of <> and []",
      sig_kn(),
      {
          law("prop3.1", {make_identity("prop3.1", dia(dia(x)), dia(x))}),
          law("prop3.2", {make_identity("prop3.2", dia(join(x, y)),
                                        join(dia(x), dia(y)))}),
          law("prop3.3", {make_identity("prop3.3", dia(meet(dia(x), dia(y))),
                                        dia(meet(x, y)))}),
          law("prop3.4", {make_identity("prop3.4", box(box(x)), box(x))}),
          law("prop3.5", {make_identity("prop3.5", box(meet(x, y)),
                                        meet(box(x), box(y)))}),
          law("prop3.6", {make_identity("prop3.6", box(join(box(x), box(y))),
                                        box(join(x, y)))}),
          law("prop3.7", {make_identity("prop3.7", join(x, knot(x)),
                                        join(knot(x), dia(x)))}),
          law("prop3.8", {make_identity("prop3.8", meet(x, knot(x)),
                                        meet(x, box(knot(x))))}),
          law("prop3.9", {make_identity("prop3.9", x,
                                        meet(join(dia(x), knot(x)), box(x)))}),
      }});

  catalog.push_back(Suite{
      "centered",
      "derived laws involving the center",
      sig_knc(),
      {
          law("centered.1", {make_identity("centered.1", neg(center_c()), one())}),
          law("centered.2",
              {make_identity("centered.2a", dia(center_c()), zero()),
               make_identity("centered.2b", box(center_c()), one())}),
          law("centered.3",
              {make_identity("centered.3a", dia(meet(center_c(), box(x))),
                             zero()),
               make_identity("centered.3b", box(join(dia(x), center_c())),
                             one())}),
          law("centered.4",
              {make_identity("centered.4", x,
                             meet(join(dia(x), center_c()), box(x)))}),
          law("centered.5", {make_identity("centered.5", join(x, center_c()),
                                           join(dia(x), center_c()))}),
      }});

  catalog.push_back(Suite{
      "modal-normal",
      "normal modal operator laws",
      sig_kn(),
      {
          law("box-normal", {make_identity("box-normal.unit", box(one()), one()),
                             make_identity("box-normal.meet", box(meet(x, y)),
                                           meet(box(x), box(y)))}),
          law("diamond-normal",
              {make_identity("diamond-normal.unit", dia(zero()), zero()),
               make_identity("diamond-normal.join", dia(join(x, y)),
                             join(dia(x), dia(y)))}),
      }});

  catalog.push_back(Suite{
      "moisil",
      "determination principle and order biconditional for <> and []",
      sig_kn(),
      {
          law("mdp", {},
              {make_quasi("mdp",
                          {Equation{box(x), box(y)}, Equation{dia(x), dia(y)}},
                          Equation{x, y})}),
          law("determination-order", {},
              {make_quasi("determination-order.fwd-dia", {leq_equation(x, y)},
                          leq_equation(dia(x), dia(y))),
               make_quasi("determination-order.fwd-box", {leq_equation(x, y)},
                          leq_equation(box(x), box(y))),
               make_quasi("determination-order.bwd",
                          {leq_equation(dia(x), dia(y)),
                           leq_equation(box(x), box(y))},
                          leq_equation(x, y))}),
      }});

  Law lemma_t =
      law("lemma-t", {make_identity("lemma-t", dia(meet(x, knot(x))), zero())});
  Law lemma_5_8 =
      law("lemma5.8", {},
          {make_quasi("lemma5.8.fwd", {Equation{neg(meet(x, y)), one()}},
                      leq_equation(neg(neg(x)), neg(y))),
           make_quasi("lemma5.8.bwd", {leq_equation(neg(neg(x)), neg(y))},
                      Equation{neg(meet(x, y)), one()})});
  Law auxiliar1 =
      law("auxiliar1", {},
          {make_quasi("auxiliar1.fwd", {Equation{dia(meet(x, y)), zero()}},
                      leq_equation(dia(x), dia(neg(y)))),
           make_quasi("auxiliar1.bwd", {leq_equation(dia(x), dia(neg(y)))},
                      Equation{dia(meet(x, y)), zero()})});
  Law lemma_2_23 =
      law("lemma2.23", {},
          {make_quasi("lemma2.23",
                      {Equation{dia(x), x}, Equation{dia(y), y},
                       Equation{dia(meet(x, y)), zero()}},
                      leq_equation(x, knot(y)))});

  catalog.push_back(Suite{"lemma-t",
                          "annihilation of x ^ ~x under <>",
                          sig_kn(),
                          {lemma_t}});
  catalog.push_back(Suite{"lemma5.8",
                          "weak pseudocomplementation biconditional",
                          sig_kn(),
                          {lemma_5_8}});
  catalog.push_back(Suite{"auxiliar1",
                          "disjointness biconditional for <>",
                          sig_kn(),
                          {auxiliar1}});
  catalog.push_back(Suite{"lemma2.23",
                          "disjoint diamond-fixed elements are knot-separated",
                          sig_kn(),
                          {lemma_2_23}});
  catalog.push_back(Suite{"lemma-aux",
                          "auxiliary biconditional and separation lemmas",
                          sig_kn(),
                          {lemma_t, lemma_5_8, auxiliar1, lemma_2_23}});

  return catalog;
}

}  // namespace

std::string Law::statement() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " ; ";
    out += s;
  };
  for (const auto& id : identities)
    add(id.eq.lhs.to_string() + " = " + id.eq.rhs.to_string());
  for (const auto& qi : quasis) {
    std::string s;
    for (size_t i = 0; i < qi.hypotheses.size(); ++i) {
      if (i) s += " & ";
      s += qi.hypotheses[i].lhs.to_string() + " = " +
           qi.hypotheses[i].rhs.to_string();
    }
    s += " => " + qi.conclusion.lhs.to_string() + " = " +
         qi.conclusion.rhs.to_string();
    add(s);
  }
  return out;
}

int SuiteResult::passed() const {
  int n = 0;
  for (const auto& l : laws)
    if (l.holds) ++n;
  return n;
}

const std::vector<Suite>& builtin_suites() {
  static const std::vector<Suite> catalog = build_catalog();
  return catalog;
}

const Suite& suite_by_name(const std::string& name) {
  for (const Suite& s : builtin_suites())
    if (s.name == name) return s;
  throw UnknownSuite("no builtin suite named '" + name + "'");
}

LawResult check_law(const Law& law, const Algebra& algebra) {
  LawResult result{law.name, true, "", std::nullopt};
  for (const auto& id : law.identities) {
    CheckResult r = check_identity(id, algebra);
    if (!r.holds) {
      result.holds = false;
      result.failed_part = id.name;
      result.counterexample = r.counterexample;
      return result;
    }
  }
  for (const auto& qi : law.quasis) {
    CheckResult r = check_quasi_identity(qi, algebra);
    if (!r.holds) {
      result.holds = false;
      result.failed_part = qi.name;
      result.counterexample = r.counterexample;
      return result;
    }
  }
  return result;
}

SuiteResult run_suite(const Suite& suite, const Algebra& algebra) {
  for (Symbol s : suite.required)
    if (!algebra.has(s))
      throw MissingOperation("suite '" + suite.name + "' needs the " +
                                 symbol_name(s) + " operation, absent from '" +
                                 algebra.name + "'",
                             symbol_name(s));
  SuiteResult result{suite.name, true, {}};
  for (const Law& l : suite.laws) {
    result.laws.push_back(check_law(l, algebra));
    if (!result.laws.back().holds) result.ok = false;
  }
  return result;
}

}  // namespace kanforge
