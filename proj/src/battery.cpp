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

#include "kanforge/battery.hpp"

#include <sstream>

#include "kanforge/constructions.hpp"
#include "kanforge/errors.hpp"
#include "kanforge/variety.hpp"

namespace kanforge {

std::string detect_variety(const Algebra& a) {
  for (const char* v : {"skanc", "skan", "kanc", "kan", "kleene"}) {
    if (!a.knot) break;
    if ((std::string(v) != "kleene") && !a.neg) continue;
    if (check_variety(a, v).ok) return v;
  }
  for (const char* v : {"stone", "pdl"})
    if (check_variety(a, v).ok) return v;
  return "none";
}

namespace {

struct BatteryBuilder {
  const Algebra& a;
  BatteryReport report;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    report.checks.push_back({name, ok, detail});
  }

  void add_suite(const std::string& name) {
    SuiteResult r = run_suite(suite_by_name(name), a);
    std::string detail =
        std::to_string(r.passed()) + "/" + std::to_string(r.total());
    if (!r.ok)
      for (const auto& law : r.laws)
        if (!law.holds) {
          detail += ", " + law.failed_part + " fails";
          if (law.counterexample)
            detail += " at " + law.counterexample->to_string();
          break;
        }
    add("suite " + name, r.ok, detail);
  }

  void add_iso(const std::string& name, const Morphism& m) {
    std::string detail;
    if (!m.verified.is_isomorphism()) {
      for (const auto& [sym, ok] : m.verified.per_symbol)
        if (!ok) detail = "does not preserve " + sym;
      if (!m.verified.injective) detail = "not injective";
      if (!m.verified.surjective) detail = "not surjective";
    }
    add(name, m.verified.is_isomorphism(), detail);
  }

  void run_kan_family(const std::string& detected) {
    const bool stone_level = detected == "skan" || detected == "skanc";
    const bool centered = detected == "kanc" || detected == "skanc";

    for (const char* s : {"kan-axioms", "prop1", "prop3", "modal-normal",
                          "moisil", "lemma-t", "lemma5.8", "auxiliar1",
                          "lemma2.23"})
      add_suite(s);
    if (centered) add_suite("centered");

    add("center characterization", check_center_characterization(a));
    QwpReport qwp = check_qwp(a);
    add("qwp characterization", qwp.ok, qwp.detail);

    ConstructedAlgebra diam = diamond_subalgebra(a);
    const char* target = stone_level ? "stone" : "pdl";
    add(std::string("diamond subalgebra passes ") + target,
        check_variety(diam.algebra, target).ok);

    ConstructedAlgebra boxed = box_subalgebra(a);
    bool box_is_knot_image = boxed.algebra.size() == diam.algebra.size();
    if (box_is_knot_image)
      for (const auto& prov : diam.provenance)
        if (boxed.element_index((*a.knot)[prov.source]) < 0) {
          box_is_knot_image = false;
          break;
        }
    add("box carrier is the knot image of the diamond carrier",
        box_is_knot_image);

    ConstructedAlgebra quot = theta_quotient(a);
    add(std::string("theta quotient passes ") + target,
        check_variety(quot.algebra, target).ok);

    ConstructedAlgebra mont = monteiro(a);
    add("monteiro algebra passes kanc",
        check_variety(mont.algebra, "kanc").ok);
    bool self_skan = stone_level;
    bool mont_skan = check_variety(mont.algebra, "skan").ok;
    add("monteiro algebra passes skan exactly when the input does",
        mont_skan == self_skan,
        mont_skan ? "both do" : "neither does");

    if (stone_level) {
      add_iso("phi: theta quotient is isomorphic to the diamond subalgebra",
              map_phi(a));
      Morphism delta = map_delta(a);
      add("delta embeds the algebra into its monteiro algebra",
          delta.verified.is_hom && delta.verified.injective,
          delta.verified.is_hom ? "" : "not a homomorphism");
      add_iso("t: monteiro algebra is isomorphic to the kalman algebra of "
              "the diamond subalgebra",
              map_t(a));
    }

    if (centered) {
      ConstructedAlgebra slice = center_slice(a);
      add(std::string("center slice passes ") + target,
          check_variety(slice.algebra, target).ok);
      add_iso("h: diamond subalgebra is isomorphic to the center slice",
              map_h(a));
      add_iso("beta: algebra is isomorphic to the kalman algebra of its "
              "center slice",
              map_beta(a));
    }

    if (detected == "skanc") {
      Signature kanc_sig = {Symbol::join, Symbol::meet, Symbol::knot,
                            Symbol::neg,  Symbol::zero, Symbol::one,
                            Symbol::center};
      ConstructedAlgebra slice = center_slice(a);
      Algebra k_quot = kalman(theta_quotient(a).algebra).algebra;
      Algebra k_diam = kalman(diamond_subalgebra(a).algebra).algebra;
      Algebra k_slice = kalman(slice.algebra).algebra;
      add("kalman algebras of the theta quotient and the diamond subalgebra "
          "are isomorphic",
          find_isomorphism(k_quot, k_diam, kanc_sig).has_value());
      add("kalman algebras of the diamond subalgebra and the center slice "
          "are isomorphic",
          find_isomorphism(k_diam, k_slice, kanc_sig).has_value());
      add("monteiro algebra is isomorphic to the input",
          find_isomorphism(mont.algebra, a, kanc_sig).has_value());
    }
  }

  void run_pdl_family(const std::string& detected) {
    const bool stone_level = detected == "stone";
    ConstructedAlgebra k = kalman(a);
    add("kalman algebra passes kanc", check_variety(k.algebra, "kanc").ok);
    bool k_skanc = check_variety(k.algebra, "skanc").ok;
    add("kalman algebra passes skanc exactly when the input passes stone",
        k_skanc == stone_level, k_skanc ? "both do" : "neither does");
    if (stone_level) {
      add_iso("alpha: algebra is isomorphic to the center slice of its "
              "kalman algebra",
              map_alpha(a));
      Signature stone_sig = {Symbol::join, Symbol::meet, Symbol::star,
                             Symbol::zero, Symbol::one};
      add("algebra is isomorphic to the diamond subalgebra of its kalman "
          "algebra",
          find_isomorphism(with_derived_star(a),
                           diamond_subalgebra(k.algebra).algebra, stone_sig)
              .has_value());
    }
  }
};

}  // namespace

BatteryReport run_battery(const Algebra& a) {
  BatteryBuilder builder{a, {}};
  builder.report.algebra = a.name;
  builder.report.detected = detect_variety(a);
  const std::string& detected = builder.report.detected;

  if (detected == "none") {
    builder.add("some variety applies", false,
                "no supported variety check passes");
  } else {
    builder.add("variety " + detected, true);
    if (detected == "skanc" || detected == "skan" || detected == "kanc" ||
        detected == "kan")
      builder.run_kan_family(detected);
    else if (detected == "stone" || detected == "pdl")
      builder.run_pdl_family(detected);
    // kleene: the axioms themselves are the whole applicable battery
  }

  builder.report.ok = true;
  for (const auto& c : builder.report.checks)
    if (!c.ok) builder.report.ok = false;
  return builder.report;
}

std::string BatteryReport::to_string() const {
  std::ostringstream out;
  out << "algebra " << algebra << ": detected variety " << detected << "\n";
  int passed = 0;
  for (const auto& c : checks) {
    out << "  " << c.name << ": " << (c.ok ? "pass" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    if (c.ok) ++passed;
  }
  out << "verdict: " << (ok ? "PASS" : "FAIL") << " (" << passed << "/"
      << checks.size() << " checks)\n";
  return out.str();
}

}  // namespace kanforge
