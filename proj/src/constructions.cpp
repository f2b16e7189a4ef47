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

#include "kanforge/constructions.hpp"

#include <algorithm>
#include <map>

#include "kanforge/errors.hpp"
#include "kanforge/variety.hpp"

namespace kanforge {

int ConstructedAlgebra::pair_index(int a, int b) const {
  for (size_t i = 0; i < provenance.size(); ++i)
    if (provenance[i].kind == Provenance::Kind::pair &&
        provenance[i].first == a && provenance[i].second == b)
      return static_cast<int>(i);
  return -1;
}

int ConstructedAlgebra::class_index(int s) const {
  for (size_t i = 0; i < provenance.size(); ++i) {
    if (provenance[i].kind != Provenance::Kind::cls) continue;
    const auto& m = provenance[i].members;
    if (std::find(m.begin(), m.end(), s) != m.end())
      return static_cast<int>(i);
  }
  return -1;
}

int ConstructedAlgebra::element_index(int s) const {
  for (size_t i = 0; i < provenance.size(); ++i)
    if (provenance[i].kind == Provenance::Kind::element &&
        provenance[i].source == s)
      return static_cast<int>(i);
  return -1;
}

namespace {

std::string pair_name(const Algebra& a, int x, int y) {
  return "(" + a.name_of(x) + "," + a.name_of(y) + ")";
}

void require_kan(const Algebra& t) {
  VarietyReport r = check_variety(t, "kan");
  if (!r.ok) {
    for (const auto& ax : r.axioms)
      if (!ax.holds)
        throw NotKAN("'" + t.name + "' fails " + ax.name +
                     (ax.counterexample
                          ? " at " + ax.counterexample->to_string()
                          : ""));
    throw NotKAN("'" + t.name + "' is not a KAN-algebra");
  }
}

int require_center(const Algebra& t) {
  if (t.center) return *t.center;
  try {
    if (auto c = find_center(t)) return *c;
  } catch (const MultipleFixedPoints&) {
  }
  throw NotCentered("'" + t.name + "' has no center (~ has no fixed point)");
}

// The construction definitions give both an order characterization and
// operation formulas; the lattice is built from the order and the formula
// tables are then required to coincide with its joins and meets.
void cross_check_tables(const FinLattice& lat,
                        const std::vector<std::vector<int>>& join_formula,
                        const std::vector<std::vector<int>>& meet_formula,
                        const std::string& tag) {
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y) {
      if (lat.join(x, y) != join_formula[x][y])
        throw Error("internal: " + tag + " join formula disagrees with the "
                    "order at (" + lat.name_of(x) + ", " + lat.name_of(y) +
                    ")");
      if (lat.meet(x, y) != meet_formula[x][y])
        throw Error("internal: " + tag + " meet formula disagrees with the "
                    "order at (" + lat.name_of(x) + ", " + lat.name_of(y) +
                    ")");
    }
}

}  // namespace

ConstructedAlgebra kalman(const Algebra& a) {
  VarietyReport pdl = check_variety(a, "pdl");
  if (!pdl.ok) {
    for (const auto& ax : pdl.axioms)
      if (!ax.holds)
        throw NotPDL("'" + a.name + "' fails " + ax.name +
                     (ax.detail.empty() ? "" : " (" + ax.detail + ")"));
    throw NotPDL("'" + a.name + "' is not a distributive p-algebra");
  }
  const std::vector<int>& star = *pdl.derived_star;
  const FinLattice& src = a.lattice;

  ConstructedAlgebra out;
  out.tag = "kalman";
  std::vector<std::string> names;
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (src.meet(x, y) == src.bottom()) {
        out.provenance.push_back(Provenance::of_pair(x, y));
        names.push_back(pair_name(a, x, y));
      }
  const int n = static_cast<int>(names.size());

  auto at = [&](int i) -> const Provenance& { return out.provenance[i]; };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      leq[p][q] = src.leq(at(p).first, at(q).first) &&
                  src.leq(at(q).second, at(p).second);
  FinLattice lat = FinLattice::from_order(names, std::move(leq));

  std::vector<std::vector<int>> join_f(n, std::vector<int>(n)),
      meet_f(n, std::vector<int>(n));
  std::vector<int> knot_t(n), neg_t(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      join_f[p][q] = out.pair_index(src.join(at(p).first, at(q).first),
                                    src.meet(at(p).second, at(q).second));
      meet_f[p][q] = out.pair_index(src.meet(at(p).first, at(q).first),
                                    src.join(at(p).second, at(q).second));
      if (join_f[p][q] < 0 || meet_f[p][q] < 0)
        throw Error("internal: kalman operation left the carrier");
    }
    knot_t[p] = out.pair_index(at(p).second, at(p).first);
    neg_t[p] = out.pair_index(star[at(p).first], at(p).first);
    if (knot_t[p] < 0 || neg_t[p] < 0)
      throw Error("internal: kalman negation left the carrier");
  }
  cross_check_tables(lat, join_f, meet_f, "kalman");

  int center = out.pair_index(src.bottom(), src.bottom());
  if (lat.bottom() != out.pair_index(src.bottom(), src.top()) ||
      lat.top() != out.pair_index(src.top(), src.bottom()) || center < 0)
    throw Error("internal: kalman bounds are misplaced");

  out.algebra = make_algebra("K(" + a.name + ")", std::move(lat),
                             std::move(knot_t), std::move(neg_t), std::nullopt,
                             center);
  return out;
}

ConstructedAlgebra monteiro(const Algebra& t) {
  require_kan(t);
  const FinLattice& src = t.lattice;
  const auto& dia = *t.diamond;
  const auto& box = *t.box;
  const auto& knot = *t.knot;
  const auto& neg = *t.neg;

  ConstructedAlgebra out;
  out.tag = "monteiro";
  std::vector<std::string> names;
  for (int x = 0; x < src.size(); ++x) {
    if (dia[x] != x) continue;
    for (int y = 0; y < src.size(); ++y)
      if (box[y] == y && src.leq(x, y)) {
        out.provenance.push_back(Provenance::of_pair(x, y));
        names.push_back(pair_name(t, x, y));
      }
  }
  const int n = static_cast<int>(names.size());

  auto at = [&](int i) -> const Provenance& { return out.provenance[i]; };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      leq[p][q] = src.leq(at(p).first, at(q).first) &&
                  src.leq(at(p).second, at(q).second);
  FinLattice lat = FinLattice::from_order(names, std::move(leq));

  std::vector<std::vector<int>> join_f(n, std::vector<int>(n)),
      meet_f(n, std::vector<int>(n));
  std::vector<int> knot_t(n), neg_t(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      join_f[p][q] = out.pair_index(src.join(at(p).first, at(q).first),
                                    box[src.join(at(p).second, at(q).second)]);
      meet_f[p][q] = out.pair_index(dia[src.meet(at(p).first, at(q).first)],
                                    src.meet(at(p).second, at(q).second));
      if (join_f[p][q] < 0 || meet_f[p][q] < 0)
        throw Error("internal: monteiro operation left the carrier");
    }
    knot_t[p] = out.pair_index(knot[at(p).second], knot[at(p).first]);
    neg_t[p] = out.pair_index(dia[neg[at(p).first]], knot[at(p).first]);
    if (knot_t[p] < 0 || neg_t[p] < 0)
      throw Error("internal: monteiro negation left the carrier");
  }
  cross_check_tables(lat, join_f, meet_f, "monteiro");

  int center = out.pair_index(src.bottom(), src.top());
  if (lat.bottom() != out.pair_index(src.bottom(), src.bottom()) ||
      lat.top() != out.pair_index(src.top(), src.top()) || center < 0)
    throw Error("internal: monteiro bounds are misplaced");

  out.algebra = make_algebra("M(" + t.name + ")", std::move(lat),
                             std::move(knot_t), std::move(neg_t), std::nullopt,
                             center);
  return out;
}

ConstructedAlgebra center_slice(const Algebra& t) {
  require_kan(t);
  const int c = require_center(t);
  const FinLattice& src = t.lattice;

  ConstructedAlgebra out;
  out.tag = "center-slice";
  std::vector<std::string> names;
  for (int x = 0; x < src.size(); ++x)
    if (src.leq(c, x)) {
      out.provenance.push_back(Provenance::of_element(x));
      names.push_back(t.name_of(x));
    }
  const int n = static_cast<int>(names.size());

  auto src_of = [&](int i) { return out.provenance[i].source; };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) leq[p][q] = src.leq(src_of(p), src_of(q));
  FinLattice lat = FinLattice::from_order(names, std::move(leq));

  std::vector<std::vector<int>> join_f(n, std::vector<int>(n)),
      meet_f(n, std::vector<int>(n));
  std::vector<int> star_t(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      join_f[p][q] = out.element_index(src.join(src_of(p), src_of(q)));
      meet_f[p][q] = out.element_index(src.meet(src_of(p), src_of(q)));
      if (join_f[p][q] < 0 || meet_f[p][q] < 0)
        throw Error("internal: center slice is not closed under joins/meets");
    }
    star_t[p] = out.element_index(src.join((*t.neg)[src_of(p)], c));
    if (star_t[p] < 0)
      throw Error("internal: center slice negation left the carrier");
  }
  cross_check_tables(lat, join_f, meet_f, "center-slice");
  if (lat.bottom() != out.element_index(c) ||
      lat.top() != out.element_index(src.top()))
    throw Error("internal: center slice bounds are misplaced");

  out.algebra = make_algebra("C(" + t.name + ")", std::move(lat), std::nullopt,
                             std::nullopt, std::move(star_t));
  return out;
}

ConstructedAlgebra diamond_subalgebra(const Algebra& t) {
  require_kan(t);
  const FinLattice& src = t.lattice;
  const auto& dia = *t.diamond;

  ConstructedAlgebra out;
  out.tag = "diamond";
  std::vector<std::string> names;
  for (int x = 0; x < src.size(); ++x)
    if (dia[x] == x) {
      out.provenance.push_back(Provenance::of_element(x));
      names.push_back(t.name_of(x));
    }
  const int n = static_cast<int>(names.size());

  auto src_of = [&](int i) { return out.provenance[i].source; };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) leq[p][q] = src.leq(src_of(p), src_of(q));
  FinLattice lat = FinLattice::from_order(names, std::move(leq));

  std::vector<std::vector<int>> join_f(n, std::vector<int>(n)),
      meet_f(n, std::vector<int>(n));
  std::vector<int> star_t(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      join_f[p][q] = out.element_index(src.join(src_of(p), src_of(q)));
      meet_f[p][q] = out.element_index(dia[src.meet(src_of(p), src_of(q))]);
      if (join_f[p][q] < 0 || meet_f[p][q] < 0)
        throw Error("internal: diamond carrier is not closed");
    }
    star_t[p] = out.element_index(dia[(*t.neg)[src_of(p)]]);
    if (star_t[p] < 0)
      throw Error("internal: diamond negation left the carrier");
  }
  cross_check_tables(lat, join_f, meet_f, "diamond");

  out.algebra = make_algebra(t.name + "^diamond", std::move(lat), std::nullopt,
                             std::nullopt, std::move(star_t));
  return out;
}

ConstructedAlgebra box_subalgebra(const Algebra& t) {
  require_kan(t);
  const FinLattice& src = t.lattice;
  const auto& box = *t.box;

  ConstructedAlgebra out;
  out.tag = "box";
  std::vector<std::string> names;
  for (int x = 0; x < src.size(); ++x)
    if (box[x] == x) {
      out.provenance.push_back(Provenance::of_element(x));
      names.push_back(t.name_of(x));
    }
  const int n = static_cast<int>(names.size());

  auto src_of = [&](int i) { return out.provenance[i].source; };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) leq[p][q] = src.leq(src_of(p), src_of(q));
  FinLattice lat = FinLattice::from_order(names, std::move(leq));

  std::vector<std::vector<int>> join_f(n, std::vector<int>(n)),
      meet_f(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      join_f[p][q] = out.element_index(box[src.join(src_of(p), src_of(q))]);
      meet_f[p][q] = out.element_index(src.meet(src_of(p), src_of(q)));
      if (join_f[p][q] < 0 || meet_f[p][q] < 0)
        throw Error("internal: box carrier is not closed");
    }
  cross_check_tables(lat, join_f, meet_f, "box");

  std::optional<std::vector<int>> star_t;
  try {
    star_t = derive_star_table(lat);
  } catch (const PseudocomplementMissing&) {
  }
  out.algebra = make_algebra(t.name + "^box", std::move(lat), std::nullopt,
                             std::nullopt, std::move(star_t));
  return out;
}

ConstructedAlgebra theta_quotient(const Algebra& t) {
  require_kan(t);
  const FinLattice& src = t.lattice;
  const auto& neg = *t.neg;

  // classes share their neg value; representative = minimum member index
  std::map<int, std::vector<int>> by_neg;
  for (int x = 0; x < src.size(); ++x) by_neg[neg[x]].push_back(x);
  std::vector<std::vector<int>> classes;
  for (auto& [_, members] : by_neg) classes.push_back(members);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  const int n = static_cast<int>(classes.size());

  std::vector<int> class_of(src.size(), -1);
  for (int i = 0; i < n; ++i)
    for (int m : classes[i]) class_of[m] = i;

  // cross-representative well-definedness, before any table is built
  for (int p = 0; p < n; ++p) {
    int nc = class_of[neg[classes[p].front()]];
    for (int m : classes[p])
      if (class_of[neg[m]] != nc)
        throw CongruenceViolation(
            "neg is not well-defined on the class of '" +
            t.name_of(classes[p].front()) + "'");
    for (int q = 0; q < n; ++q) {
      int jc = class_of[src.join(classes[p].front(), classes[q].front())];
      int mc = class_of[src.meet(classes[p].front(), classes[q].front())];
      for (int mp : classes[p])
        for (int mq : classes[q]) {
          if (class_of[src.join(mp, mq)] != jc)
            throw CongruenceViolation(
                "join is not well-defined on the classes of '" +
                t.name_of(mp) + "' and '" + t.name_of(mq) + "'");
          if (class_of[src.meet(mp, mq)] != mc)
            throw CongruenceViolation(
                "meet is not well-defined on the classes of '" +
                t.name_of(mp) + "' and '" + t.name_of(mq) + "'");
        }
    }
  }

  ConstructedAlgebra out;
  out.tag = "theta";
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    out.provenance.push_back(Provenance::of_class(classes[i]));
    names.push_back("[" + t.name_of(classes[i].front()) + "]");
  }

  // class of x is below class of y exactly when !y <= !x
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      leq[p][q] = src.leq(neg[classes[q].front()], neg[classes[p].front()]);
  FinLattice lat = FinLattice::from_order(names, std::move(leq));

  std::vector<std::vector<int>> join_f(n, std::vector<int>(n)),
      meet_f(n, std::vector<int>(n));
  std::vector<int> star_t(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      join_f[p][q] = class_of[src.join(classes[p].front(), classes[q].front())];
      meet_f[p][q] = class_of[src.meet(classes[p].front(), classes[q].front())];
    }
    star_t[p] = class_of[neg[classes[p].front()]];
  }
  cross_check_tables(lat, join_f, meet_f, "theta");
  if (lat.bottom() != class_of[src.bottom()] ||
      lat.top() != class_of[src.top()])
    throw Error("internal: theta bounds are misplaced");

  out.algebra = make_algebra(t.name + "^theta", std::move(lat), std::nullopt,
                             std::nullopt, std::move(star_t));
  return out;
}

ConstructedAlgebra apply_construction(const std::string& tag,
                                      const Algebra& a) {
  if (tag == "kalman") return kalman(a);
  if (tag == "monteiro") return monteiro(a);
  if (tag == "center-slice") return center_slice(a);
  if (tag == "diamond") return diamond_subalgebra(a);
  if (tag == "box") return box_subalgebra(a);
  if (tag == "theta") return theta_quotient(a);
  throw Error("unknown construction '" + tag + "'");
}

namespace {

Signature stone_sig() {
  return {Symbol::join, Symbol::meet, Symbol::star, Symbol::zero, Symbol::one};
}

Signature kan_sig(bool with_center) {
  Signature s = {Symbol::join, Symbol::meet, Symbol::knot, Symbol::neg,
                 Symbol::zero, Symbol::one};
  if (with_center) s.insert(Symbol::center);
  return s;
}

}  // namespace

Morphism map_phi(const Algebra& t) {
  ConstructedAlgebra quot = theta_quotient(t);
  ConstructedAlgebra diam = diamond_subalgebra(t);
  std::vector<int> mapping(quot.algebra.size());
  for (int p = 0; p < quot.algebra.size(); ++p) {
    int rep = quot.provenance[p].members.front();
    mapping[p] = diam.element_index((*t.diamond)[rep]);
    if (mapping[p] < 0) throw Error("internal: phi left the diamond carrier");
  }
  return make_morphism(quot.algebra, diam.algebra, std::move(mapping),
                       stone_sig());
}

Morphism map_h(const Algebra& t) {
  const int c = require_center(t);
  ConstructedAlgebra diam = diamond_subalgebra(t);
  ConstructedAlgebra slice = center_slice(t);
  std::vector<int> mapping(diam.algebra.size());
  for (int p = 0; p < diam.algebra.size(); ++p) {
    int x = diam.provenance[p].source;
    mapping[p] = slice.element_index(t.lattice.join(x, c));
    if (mapping[p] < 0) throw Error("internal: h left the slice carrier");
  }
  return make_morphism(diam.algebra, slice.algebra, std::move(mapping),
                       stone_sig());
}

Morphism map_alpha(const Algebra& a) {
  Algebra dom = with_derived_star(a);
  ConstructedAlgebra k = kalman(a);
  ConstructedAlgebra slice = center_slice(k.algebra);
  std::vector<int> mapping(a.size());
  for (int x = 0; x < a.size(); ++x) {
    int pair = k.pair_index(x, a.lattice.bottom());
    mapping[x] = pair < 0 ? -1 : slice.element_index(pair);
    if (mapping[x] < 0) throw Error("internal: alpha left the slice carrier");
  }
  return make_morphism(std::move(dom), slice.algebra, std::move(mapping),
                       stone_sig());
}

Morphism map_beta(const Algebra& t) {
  const int c = require_center(t);
  ConstructedAlgebra slice = center_slice(t);
  ConstructedAlgebra k = kalman(slice.algebra);
  std::vector<int> mapping(t.size());
  for (int x = 0; x < t.size(); ++x) {
    int left = slice.element_index(t.lattice.join(x, c));
    int right = slice.element_index(t.lattice.join((*t.knot)[x], c));
    mapping[x] = (left < 0 || right < 0) ? -1 : k.pair_index(left, right);
    if (mapping[x] < 0) throw Error("internal: beta left the pair carrier");
  }
  return make_morphism(t, k.algebra, std::move(mapping),
                       kan_sig(t.center.has_value()));
}

Morphism map_delta(const Algebra& t) {
  ConstructedAlgebra m = monteiro(t);
  std::vector<int> mapping(t.size());
  for (int x = 0; x < t.size(); ++x) {
    mapping[x] = m.pair_index((*t.diamond)[x], (*t.box)[x]);
    if (mapping[x] < 0) throw Error("internal: delta left the pair carrier");
  }
  return make_morphism(t, m.algebra, std::move(mapping),
                       kan_sig(t.center.has_value()));
}

Morphism map_t(const Algebra& t) {
  ConstructedAlgebra m = monteiro(t);
  ConstructedAlgebra diam = diamond_subalgebra(t);
  ConstructedAlgebra k = kalman(diam.algebra);
  std::vector<int> mapping(m.algebra.size());
  for (int p = 0; p < m.algebra.size(); ++p) {
    int x = m.provenance[p].first;
    int y = m.provenance[p].second;
    int dx = diam.element_index(x);
    int dy = diam.element_index((*t.knot)[y]);
    mapping[p] = (dx < 0 || dy < 0) ? -1 : k.pair_index(dx, dy);
    if (mapping[p] < 0) throw Error("internal: t left the pair carrier");
  }
  return make_morphism(m.algebra, k.algebra, std::move(mapping),
                       kan_sig(true));
}

namespace {

void require_source_hom(const std::vector<int>& mapping, const Algebra& dom,
                        const Algebra& cod, const Signature& sig,
                        const std::string& tag) {
  PreservationRecord rec = check_homomorphism(mapping, dom, cod, sig);
  if (!rec.is_hom)
    throw NotAHomomorphism("mapping is not a homomorphism in the source "
                           "category of '" + tag + "'");
}

}  // namespace

Morphism lift_morphism(const Morphism& f, const std::string& tag) {
  if (!f.verified.is_hom)
    throw NotAHomomorphism("the given morphism is not a verified homomorphism");

  if (tag == "kalman") {
    if (!check_variety(f.domain, "pdl").ok || !check_variety(f.codomain, "pdl").ok)
      throw WrongCategory("kalman lifts act on distributive p-algebras");
    Algebra dom = with_derived_star(f.domain);
    Algebra cod = with_derived_star(f.codomain);
    require_source_hom(f.mapping, dom, cod, stone_sig(), tag);
    ConstructedAlgebra ka = kalman(f.domain), kb = kalman(f.codomain);
    std::vector<int> mapping(ka.algebra.size());
    for (int p = 0; p < ka.algebra.size(); ++p) {
      mapping[p] = kb.pair_index(f.mapping[ka.provenance[p].first],
                                 f.mapping[ka.provenance[p].second]);
      if (mapping[p] < 0)
        throw Error("internal: kalman lift left the carrier");
    }
    return make_morphism(ka.algebra, kb.algebra, std::move(mapping),
                         kan_sig(true));
  }

  if (tag == "center-slice") {
    VarietyReport da = check_variety(f.domain, "kanc");
    VarietyReport db = check_variety(f.codomain, "kanc");
    if (!da.ok || !db.ok)
      throw WrongCategory("center-slice lifts act on centered KAN-algebras");
    require_source_hom(f.mapping, f.domain, f.codomain, kan_sig(false), tag);
    ConstructedAlgebra ca = center_slice(f.domain);
    ConstructedAlgebra cb = center_slice(f.codomain);
    std::vector<int> mapping(ca.algebra.size());
    for (int p = 0; p < ca.algebra.size(); ++p) {
      mapping[p] = cb.element_index(f.mapping[ca.provenance[p].source]);
      if (mapping[p] < 0)
        throw Error("internal: center-slice lift left the carrier");
    }
    return make_morphism(ca.algebra, cb.algebra, std::move(mapping),
                         stone_sig());
  }

  if (tag == "monteiro") {
    if (!check_variety(f.domain, "kan").ok || !check_variety(f.codomain, "kan").ok)
      throw WrongCategory("monteiro lifts act on KAN-algebras");
    require_source_hom(f.mapping, f.domain, f.codomain, kan_sig(false), tag);
    ConstructedAlgebra ma = monteiro(f.domain), mb = monteiro(f.codomain);
    std::vector<int> mapping(ma.algebra.size());
    for (int p = 0; p < ma.algebra.size(); ++p) {
      mapping[p] = mb.pair_index(f.mapping[ma.provenance[p].first],
                                 f.mapping[ma.provenance[p].second]);
      if (mapping[p] < 0)
        throw Error("internal: monteiro lift left the carrier");
    }
    return make_morphism(ma.algebra, mb.algebra, std::move(mapping),
                         kan_sig(true));
  }

  if (tag == "diamond") {
    if (!check_variety(f.domain, "kan").ok || !check_variety(f.codomain, "kan").ok)
      throw WrongCategory("diamond lifts act on KAN-algebras");
    require_source_hom(f.mapping, f.domain, f.codomain, kan_sig(false), tag);
    ConstructedAlgebra da = diamond_subalgebra(f.domain);
    ConstructedAlgebra db = diamond_subalgebra(f.codomain);
    std::vector<int> mapping(da.algebra.size());
    for (int p = 0; p < da.algebra.size(); ++p) {
      int img = f.mapping[da.provenance[p].source];
      mapping[p] = db.element_index((*f.codomain.diamond)[img]);
      if (mapping[p] < 0)
        throw Error("internal: diamond lift left the carrier");
    }
    return make_morphism(da.algebra, db.algebra, std::move(mapping),
                         stone_sig());
  }

  if (tag == "theta") {
    if (!check_variety(f.domain, "kan").ok || !check_variety(f.codomain, "kan").ok)
      throw WrongCategory("theta lifts act on KAN-algebras");
    require_source_hom(f.mapping, f.domain, f.codomain, kan_sig(false), tag);
    ConstructedAlgebra qa = theta_quotient(f.domain);
    ConstructedAlgebra qb = theta_quotient(f.codomain);
    std::vector<int> mapping(qa.algebra.size());
    for (int p = 0; p < qa.algebra.size(); ++p) {
      int cls = qb.class_index(f.mapping[qa.provenance[p].members.front()]);
      for (int m : qa.provenance[p].members)
        if (qb.class_index(f.mapping[m]) != cls)
          throw CongruenceViolation(
              "theta lift is class-dependent on the class of '" +
              f.domain.name_of(qa.provenance[p].members.front()) + "'");
      mapping[p] = cls;
    }
    return make_morphism(qa.algebra, qb.algebra, std::move(mapping),
                         stone_sig());
  }

  throw Error("unknown functor tag '" + tag + "'");
}

}  // namespace kanforge
