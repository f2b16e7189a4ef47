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

#include "kanforge/morphism.hpp"

#include <algorithm>
#include <array>

#include "kanforge/errors.hpp"

namespace kanforge {

namespace {

void validate_mapping(const std::vector<int>& mapping, const Algebra& dom,
                      const Algebra& cod) {
  if (static_cast<int>(mapping.size()) != dom.size())
    throw Error("mapping is not total on the domain");
  for (int v : mapping)
    if (v < 0 || v >= cod.size())
      throw Error("mapping has an out-of-range value");
}

bool preserves_unary(const std::vector<int>& f, const Algebra& dom,
                     const Algebra& cod, Symbol s) {
  for (int x = 0; x < dom.size(); ++x)
    if (f[dom.apply_unary(s, x)] != cod.apply_unary(s, f[x])) return false;
  return true;
}

}  // namespace

PreservationRecord check_homomorphism(const std::vector<int>& mapping,
                                      const Algebra& dom, const Algebra& cod,
                                      const Signature& signature) {
  validate_mapping(mapping, dom, cod);
  for (Symbol s : signature)
    if (!dom.has(s) || !cod.has(s))
      throw SignatureMismatch("signature symbol '" + symbol_name(s) +
                              "' is not available on both algebras");

  PreservationRecord rec;
  for (Symbol s : signature) {
    bool ok = true;
    switch (s) {
      case Symbol::join:
        for (int x = 0; x < dom.size() && ok; ++x)
          for (int y = 0; y < dom.size(); ++y)
            if (mapping[dom.lattice.join(x, y)] !=
                cod.lattice.join(mapping[x], mapping[y])) {
              ok = false;
              break;
            }
        break;
      case Symbol::meet:
        for (int x = 0; x < dom.size() && ok; ++x)
          for (int y = 0; y < dom.size(); ++y)
            if (mapping[dom.lattice.meet(x, y)] !=
                cod.lattice.meet(mapping[x], mapping[y])) {
              ok = false;
              break;
            }
        break;
      case Symbol::zero:
        ok = mapping[dom.lattice.bottom()] == cod.lattice.bottom();
        break;
      case Symbol::one:
        ok = mapping[dom.lattice.top()] == cod.lattice.top();
        break;
      case Symbol::center:
        ok = mapping[*dom.center] == *cod.center;
        break;
      case Symbol::knot:
      case Symbol::neg:
      case Symbol::star:
        ok = preserves_unary(mapping, dom, cod, s);
        break;
    }
    rec.per_symbol.emplace_back(symbol_name(s), ok);
  }

  rec.is_hom = std::all_of(rec.per_symbol.begin(), rec.per_symbol.end(),
                           [](const auto& p) { return p.second; });
  std::vector<bool> hit(cod.size(), false);
  rec.injective = true;
  for (int v : mapping) {
    if (hit[v]) rec.injective = false;
    hit[v] = true;
  }
  rec.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return rec;
}

Morphism make_morphism(Algebra dom, Algebra cod, std::vector<int> mapping,
                       Signature signature) {
  PreservationRecord rec = check_homomorphism(mapping, dom, cod, signature);
  return Morphism{std::move(dom), std::move(cod), std::move(mapping),
                  std::move(signature), std::move(rec)};
}

Morphism identity_morphism(const Algebra& a, Signature signature) {
  std::vector<int> id(a.size());
  for (int i = 0; i < a.size(); ++i) id[i] = i;
  return make_morphism(a, a, std::move(id), std::move(signature));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!f.codomain.structurally_equal(g.domain))
    throw Error("cannot compose: codomain of '" + f.codomain.name +
                "' is not structurally equal to domain of '" + g.domain.name +
                "'");
  std::vector<int> mapping(f.mapping.size());
  for (size_t i = 0; i < f.mapping.size(); ++i)
    mapping[i] = g.mapping[f.mapping[i]];
  Signature sig;
  for (Symbol s : f.signature)
    if (g.signature.count(s)) sig.insert(s);
  return make_morphism(f.domain, g.codomain, std::move(mapping), std::move(sig));
}

bool same_morphism(const Morphism& a, const Morphism& b) {
  return a.mapping == b.mapping && a.domain.structurally_equal(b.domain) &&
         a.codomain.structurally_equal(b.codomain);
}

namespace {

// Label-independent per-element key: degrees in the order and covering graph
// plus the shape of each unary table in the signature.
std::vector<int> element_invariant(const Algebra& a, int x,
                                   const Signature& sig,
                                   const std::vector<int>& ncovers,
                                   const std::vector<int>& ncocovers) {
  const auto& lat = a.lattice;
  int down = 0, up = 0;
  for (int y = 0; y < a.size(); ++y) {
    if (lat.leq(y, x)) ++down;
    if (lat.leq(x, y)) ++up;
  }
  std::vector<int> key = {down, up, ncovers[x], ncocovers[x]};
  for (Symbol s : {Symbol::knot, Symbol::neg, Symbol::star}) {
    if (!sig.count(s)) continue;
    int img = a.apply_unary(s, x);
    int img_down = 0;
    for (int y = 0; y < a.size(); ++y)
      if (lat.leq(y, img)) ++img_down;
    key.push_back(img == x ? 1 : 0);
    key.push_back(img_down);
  }
  if (sig.count(Symbol::center)) key.push_back(x == *a.center ? 1 : 0);
  return key;
}

std::vector<std::vector<int>> invariants(const Algebra& a,
                                         const Signature& sig) {
  std::vector<int> ncovers(a.size(), 0), ncocovers(a.size(), 0);
  for (auto [x, y] : a.lattice.covers()) {
    ncocovers[x]++;  // y covers x
    ncovers[y]++;
  }
  std::vector<std::vector<int>> keys;
  keys.reserve(a.size());
  for (int x = 0; x < a.size(); ++x)
    keys.push_back(element_invariant(a, x, sig, ncovers, ncocovers));
  return keys;
}

struct IsoSearch {
  const Algebra& a;
  const Algebra& b;
  const Signature& sig;
  std::vector<std::vector<int>> inv_a, inv_b;
  std::vector<int> mapping;      // a index -> b index or -1
  std::vector<bool> used;        // b indices taken
  std::vector<Symbol> unary_syms;

  bool consistent(int k) const {
    const int fk = mapping[k];
    for (int i = 0; i <= k; ++i) {
      if (a.lattice.leq(i, k) != b.lattice.leq(mapping[i], fk)) return false;
      if (a.lattice.leq(k, i) != b.lattice.leq(fk, mapping[i])) return false;
    }
    for (Symbol s : unary_syms) {
      for (int i = 0; i <= k; ++i) {
        int u = a.apply_unary(s, i);
        if (u > k) continue;  // image not assigned yet
        if (i != k && u != k) continue;  // constraint seen at an earlier step
        if (mapping[u] != b.apply_unary(s, mapping[i])) return false;
      }
    }
    if (sig.count(Symbol::center)) {
      if (k == *a.center && fk != *b.center) return false;
      if (fk == *b.center && k != *a.center) return false;
    }
    return true;
  }

  bool extend(int k) {
    if (k == a.size()) return true;
    for (int j = 0; j < b.size(); ++j) {
      if (used[j] || inv_a[k] != inv_b[j]) continue;
      mapping[k] = j;
      used[j] = true;
      if (consistent(k) && extend(k + 1)) return true;
      used[j] = false;
      mapping[k] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Morphism> find_isomorphism(const Algebra& a, const Algebra& b,
                                         const Signature& signature) {
  if (a.size() != b.size()) return std::nullopt;
  for (Symbol s : signature)
    if (!a.has(s) || !b.has(s)) return std::nullopt;

  IsoSearch search{a,  b,  signature, invariants(a, signature),
                   invariants(b, signature), {}, {}, {}};
  auto sorted_a = search.inv_a, sorted_b = search.inv_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  for (Symbol s : {Symbol::knot, Symbol::neg, Symbol::star})
    if (signature.count(s)) search.unary_syms.push_back(s);
  search.mapping.assign(a.size(), -1);
  search.used.assign(b.size(), false);
  if (!search.extend(0)) return std::nullopt;

  Morphism m = make_morphism(a, b, search.mapping, signature);
  return m.verified.is_isomorphism() ? std::optional<Morphism>(std::move(m))
                                     : std::nullopt;
}

std::vector<Morphism> enumerate_homomorphisms(const Algebra& a,
                                              const Algebra& b,
                                              const Signature& signature,
                                              size_t limit) {
  std::vector<Morphism> out;
  if (limit == 0) return out;
  for (Symbol s : signature)
    if (!a.has(s) || !b.has(s))
      throw SignatureMismatch("signature symbol '" + symbol_name(s) +
                              "' is not available on both algebras");

  const std::vector<int> irr = a.lattice.join_irreducibles();
  const size_t k = irr.size();
  std::vector<int> choice(k, 0);

  // Join homomorphisms are fixed by their values on join-irreducibles:
  // f(x) is the join of the chosen images over the irreducibles below x.
  while (true) {
    bool monotone = true;
    for (size_t i = 0; i < k && monotone; ++i)
      for (size_t j = 0; j < k; ++j)
        if (a.lattice.leq(irr[i], irr[j]) &&
            !b.lattice.leq(choice[i], choice[j])) {
          monotone = false;
          break;
        }
    if (monotone) {
      std::vector<int> f(a.size());
      for (int x = 0; x < a.size(); ++x) {
        int acc = b.lattice.bottom();
        for (size_t i = 0; i < k; ++i)
          if (a.lattice.leq(irr[i], x)) acc = b.lattice.join(acc, choice[i]);
        f[x] = acc;
      }
      PreservationRecord rec = check_homomorphism(f, a, b, signature);
      if (rec.is_hom) {
        out.push_back(Morphism{a, b, std::move(f), signature, std::move(rec)});
        if (out.size() >= limit) return out;
      }
    }
    size_t pos = k;
    while (pos > 0) {
      if (++choice[pos - 1] < b.size()) break;
      choice[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

}  // namespace kanforge
