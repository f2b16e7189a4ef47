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

#include "kanforge/variety.hpp"

#include <algorithm>

#include "kanforge/errors.hpp"

namespace kanforge {

namespace {

void require(const Algebra& a, Symbol s, const std::string& variety) {
  if (!a.has(s))
    throw MissingOperation("variety '" + variety + "' needs the " +
                               symbol_name(s) + " operation, absent from '" +
                               a.name + "'",
                           symbol_name(s));
}

AxiomResult distributivity_axiom(const Algebra& a) {
  AxiomResult r{"distributive", true, std::nullopt, ""};
  if (auto w = a.lattice.distributivity_failure()) {
    r.holds = false;
    Counterexample cex;
    cex.bindings = {{"x", a.name_of(w->x)},
                    {"y", a.name_of(w->y)},
                    {"z", a.name_of(w->z)}};
    cex.detail = "x ^ (y v z) = " +
                 a.name_of(a.lattice.meet(w->x, a.lattice.join(w->y, w->z))) +
                 " but (x ^ y) v (x ^ z) = " +
                 a.name_of(a.lattice.join(a.lattice.meet(w->x, w->y),
                                          a.lattice.meet(w->x, w->z)));
    r.counterexample = cex;
  }
  return r;
}

void append_suite_axioms(std::vector<AxiomResult>& out, const std::string& name,
                         const Algebra& a) {
  for (const LawResult& lr : run_suite(suite_by_name(name), a).laws)
    out.push_back(AxiomResult{lr.law, lr.holds, lr.counterexample, ""});
}

// pdl verdict: distributive + total pseudocomplement (+ user star agreement).
void append_pdl_axioms(std::vector<AxiomResult>& out, const Algebra& a,
                       VarietyReport& report) {
  out.push_back(distributivity_axiom(a));
  AxiomResult pc{"pseudocomplemented", true, std::nullopt, ""};
  std::vector<int> table;
  try {
    table = derive_star_table(a.lattice);
  } catch (const PseudocomplementMissing& e) {
    pc.holds = false;
    pc.detail = "the set {y : " + e.witness +
                " ^ y = 0} has no maximum element";
  }
  out.push_back(pc);
  if (!pc.holds) return;
  report.derived_star = table;

  if (a.star) {
    AxiomResult agree{"star-table-consistent", *a.star == table, std::nullopt,
                      ""};
    if (!agree.holds) {
      for (int x = 0; x < a.size(); ++x)
        if ((*a.star)[x] != table[x]) {
          agree.detail = "declared " + a.name_of(x) + "* = " +
                         a.name_of((*a.star)[x]) + " but computed " +
                         a.name_of(table[x]);
          break;
        }
    }
    out.push_back(agree);
  }
}

void append_centered_axiom(std::vector<AxiomResult>& out, const Algebra& a,
                           VarietyReport& report) {
  AxiomResult c{"centered", false, std::nullopt, ""};
  if (a.center) {
    int e = *a.center;
    if ((*a.knot)[e] == e) {
      c.holds = true;
      report.found_center = e;
    } else {
      c.detail = "declared center '" + a.name_of(e) + "' is not fixed by ~";
    }
    out.push_back(c);
    return;
  }
  try {
    auto e = find_center(a);
    if (e) {
      c.holds = true;
      c.detail = "found center '" + a.name_of(*e) + "'";
      report.found_center = e;
    } else {
      c.detail = "~ has no fixed point";
    }
  } catch (const MultipleFixedPoints& e) {
    c.detail = "~ fixes both '" + e.first + "' and '" + e.second + "'";
  }
  out.push_back(c);
}

}  // namespace

const std::vector<std::string>& variety_names() {
  static const std::vector<std::string> names = {
      "pdl", "stone", "kleene", "kan", "kanc", "skan", "skanc"};
  return names;
}

VarietyReport check_variety(const Algebra& a, const std::string& variety) {
  if (std::find(variety_names().begin(), variety_names().end(), variety) ==
      variety_names().end())
    throw UnknownVariety("unknown variety '" + variety + "'");

  VarietyReport report;
  report.variety = variety;
  report.algebra = a.name;

  if (variety == "pdl" || variety == "stone") {
    append_pdl_axioms(report.axioms, a, report);
    bool pdl_ok = std::all_of(report.axioms.begin(), report.axioms.end(),
                              [](const AxiomResult& r) { return r.holds; });
    if (variety == "stone") {
      if (pdl_ok) {
        Algebra with_star = a;
        with_star.star = report.derived_star;
        append_suite_axioms(report.axioms, "stone", with_star);
      } else {
        report.axioms.push_back(
            {"stone", false, std::nullopt, "not a distributive p-algebra"});
      }
    }
  } else {
    require(a, Symbol::knot, variety);
    report.axioms.push_back(distributivity_axiom(a));
    append_suite_axioms(report.axioms, "kleene", a);
    if (variety != "kleene") {
      require(a, Symbol::neg, variety);
      append_suite_axioms(report.axioms, "kan-axioms", a);
      if (variety == "skan" || variety == "skanc")
        append_suite_axioms(report.axioms, "stone-kan", a);
      if (variety == "kanc" || variety == "skanc")
        append_centered_axiom(report.axioms, a, report);
    }
  }

  report.ok = std::all_of(report.axioms.begin(), report.axioms.end(),
                          [](const AxiomResult& r) { return r.holds; });
  return report;
}

std::optional<int> find_center(const Algebra& a) {
  if (!a.knot)
    throw MissingOperation(
        "algebra '" + a.name + "' has no knot table", "knot");
  std::optional<int> found;
  for (int x = 0; x < a.size(); ++x) {
    if ((*a.knot)[x] != x) continue;
    if (found)
      throw MultipleFixedPoints(
          "~ fixes both '" + a.name_of(*found) + "' and '" + a.name_of(x) +
              "'; the Kleene axioms cannot hold",
          a.name_of(*found), a.name_of(x));
    found = x;
  }
  return found;
}

bool check_center_characterization(const Algebra& a) {
  if (!a.knot)
    throw MissingOperation("algebra '" + a.name + "' has no knot table",
                           "knot");
  for (int e = 0; e < a.size(); ++e) {
    bool fixed = (*a.knot)[e] == e;
    bool modal = diamond_of(a, e) == a.lattice.bottom() &&
                 box_of(a, e) == a.lattice.top();
    if (fixed != modal) return false;
  }
  return true;
}

QwpReport check_qwp(const Algebra& a) {
  if (!a.knot)
    throw MissingOperation("algebra '" + a.name + "' has no knot table",
                           "knot");
  if (!a.neg)
    throw MissingOperation("algebra '" + a.name + "' has no neg table", "neg");
  QwpReport report;
  report.max_ok = true;
  report.wp_ok = true;
  const auto& lat = a.lattice;

  for (int x = 0; x < a.size() && report.max_ok; ++x) {
    // greatest y with x ^ y <= ~x
    int best = -1;
    std::vector<int> members;
    for (int y = 0; y < a.size(); ++y)
      if (lat.leq(lat.meet(x, y), (*a.knot)[x])) members.push_back(y);
    for (int m : members) {
      bool greatest = true;
      for (int y : members)
        if (!lat.leq(y, m)) {
          greatest = false;
          break;
        }
      if (greatest) {
        best = m;
        break;
      }
    }
    if (best < 0) {
      report.max_ok = false;
      report.detail = "the set {y : " + a.name_of(x) + " ^ y <= ~" +
                      a.name_of(x) + "} has no maximum";
    } else if (best != (*a.neg)[x]) {
      report.max_ok = false;
      report.detail = "max{y : " + a.name_of(x) + " ^ y <= ~" + a.name_of(x) +
                      "} is " + a.name_of(best) + " but !" + a.name_of(x) +
                      " = " + a.name_of((*a.neg)[x]);
    }
  }

  for (int x = 0; x < a.size() && report.wp_ok; ++x)
    for (int y = 0; y < a.size(); ++y) {
      bool lhs = (*a.neg)[lat.meet(x, y)] == lat.top();
      bool rhs = lat.leq((*a.neg)[(*a.neg)[x]], (*a.neg)[y]);
      if (lhs != rhs) {
        report.wp_ok = false;
        report.detail = "wp biconditional fails at x=" + a.name_of(x) +
                        ", y=" + a.name_of(y) + " (" +
                        (lhs ? "!(x ^ y) = 1 yet !!x is not below !y"
                             : "!!x <= !y yet !(x ^ y) is not 1") +
                        ")";
        break;
      }
    }

  report.ok = report.max_ok && report.wp_ok;
  return report;
}

int diamond_of(const Algebra& a, int x) {
  if (!a.diamond)
    throw MissingOperation(
        "algebra '" + a.name + "' lacks knot or neg; <> is undefined", "knot");
  return (*a.diamond)[x];
}

int box_of(const Algebra& a, int x) {
  if (!a.box)
    throw MissingOperation(
        "algebra '" + a.name + "' lacks knot or neg; [] is undefined", "neg");
  return (*a.box)[x];
}

}  // namespace kanforge
