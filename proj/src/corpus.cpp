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

#include "kanforge/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "kanforge/errors.hpp"
#include "kanforge/io.hpp"
#include "kanforge/morphism.hpp"
#include "kanforge/variety.hpp"

namespace kanforge {

namespace {

int env_bound(int fallback) {
  if (const char* raw = std::getenv("KANFORGE_MAX_SIZE")) {
    int v = std::atoi(raw);
    if (v > fallback) return v;
  }
  return fallback;
}

}  // namespace

int max_poset_size() { return env_bound(5); }
int max_operator_lattice_size() { return env_bound(8); }

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1) throw BoundExceeded("poset size must be at least 1");
  if (n > max_poset_size())
    throw BoundExceeded("poset size " + std::to_string(n) +
                        " exceeds the bound " +
                        std::to_string(max_poset_size()) +
                        " (raise KANFORGE_MAX_SIZE to go further)");

  // Every poset admits a linear extension, so it is isomorphic to one whose
  // strict order only relates i < j with i < j numerically.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::set<std::vector<bool>> seen;
  std::vector<Poset> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask & (1ul << s)) lt[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) {
            transitive = false;
            break;
          }
    if (!transitive) continue;

    // canonical form: minimum relation bitstring over all relabelings
    std::vector<bool> canon;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<bool> flat(n * n, false);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (lt[i][j]) flat[perm[i] * n + perm[j]] = true;
      if (canon.empty() || flat < canon) canon = flat;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(canon).second) continue;

    Poset p;
    p.n = n;
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      p.leq[i][i] = true;
      for (int j = 0; j < n; ++j)
        if (lt[i][j]) p.leq[i][j] = true;
    }
    out.push_back(std::move(p));
  }
  return out;
}

FinLattice downset_lattice(const Poset& p, const std::string& name_prefix) {
  std::vector<unsigned> downsets;
  for (unsigned mask = 0; mask < (1u << p.n); ++mask) {
    bool closed = true;
    for (int i = 0; i < p.n && closed; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < p.n; ++j)
        if (p.leq[j][i] && !(mask & (1u << j))) {
          closed = false;
          break;
        }
    }
    if (closed) downsets.push_back(mask);
  }
  std::sort(downsets.begin(), downsets.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<std::string> names;
  for (unsigned mask : downsets) {
    std::string name = name_prefix;
    if (mask == 0) {
      name += "0";
    } else {
      for (int i = 0; i < p.n; ++i)
        if (mask & (1u << i)) name += static_cast<char>('a' + i);
    }
    names.push_back(std::move(name));
  }
  const int n = static_cast<int>(downsets.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      leq[x][y] = (downsets[x] & ~downsets[y]) == 0;
  return FinLattice::from_order(std::move(names), std::move(leq));
}

namespace {

// Join homomorphic unary tables are fixed by their values on the
// join-irreducibles: t(x) = meet of the chosen values over irreducibles
// below x (top for x = 0).  This covers every antitone map turning joins
// into meets, which both ~ (by K2) and ! (by N2) must be.
struct AntitoneTableScan {
  const FinLattice& lat;
  std::vector<int> irr;
  std::vector<int> choice;

  explicit AntitoneTableScan(const FinLattice& l)
      : lat(l), irr(l.join_irreducibles()), choice(irr.size(), 0) {}

  bool monotone_reversing() const {
    for (size_t i = 0; i < irr.size(); ++i)
      for (size_t j = 0; j < irr.size(); ++j)
        if (lat.leq(irr[i], irr[j]) && !lat.leq(choice[j], choice[i]))
          return false;
    return true;
  }

  std::vector<int> extend() const {
    std::vector<int> table(lat.size());
    for (int x = 0; x < lat.size(); ++x) {
      int acc = lat.top();
      for (size_t i = 0; i < irr.size(); ++i)
        if (lat.leq(irr[i], x)) acc = lat.meet(acc, choice[i]);
      table[x] = acc;
    }
    return table;
  }

  bool next() {
    size_t pos = choice.size();
    while (pos > 0) {
      if (++choice[pos - 1] < lat.size()) return true;
      choice[pos - 1] = 0;
      --pos;
    }
    return false;
  }
};

bool is_involution(const FinLattice& lat, const std::vector<int>& t) {
  for (int x = 0; x < lat.size(); ++x)
    if (t[t[x]] != x) return false;
  return true;
}

std::vector<std::vector<int>> kleene_knot_tables(const FinLattice& lat) {
  std::vector<std::vector<int>> out;
  AntitoneTableScan scan(lat);
  do {
    if (!scan.monotone_reversing()) continue;
    std::vector<int> t = scan.extend();
    if (t[lat.bottom()] != lat.top() || t[lat.top()] != lat.bottom()) continue;
    if (!is_involution(lat, t)) continue;
    Algebra a = make_algebra("candidate", lat, t);
    if (check_variety(a, "kleene").ok) out.push_back(std::move(t));
  } while (scan.next());
  return out;
}

}  // namespace

std::vector<Algebra> enumerate_operator_pairs(const FinLattice& lattice,
                                              const std::string& variety,
                                              const EnumOptions& options) {
  static const std::set<std::string> allowed = {"kleene", "kan", "kanc",
                                                "skan", "skanc"};
  if (!allowed.count(variety))
    throw UnknownVariety("enumeration supports kleene/kan/kanc/skan/skanc, "
                         "not '" + variety + "'");
  int bound = options.max_size > 0 ? options.max_size
                                   : max_operator_lattice_size();
  if (lattice.size() > bound)
    throw BoundExceeded("lattice has " + std::to_string(lattice.size()) +
                        " elements, past the bound " + std::to_string(bound) +
                        " (raise KANFORGE_MAX_SIZE to go further)");

  std::vector<Algebra> out;
  if (!lattice.is_distributive()) return out;

  auto emit = [&](std::optional<std::vector<int>> knot,
                  std::optional<std::vector<int>> neg) {
    Algebra a = make_algebra("candidate", lattice, std::move(knot),
                             std::move(neg));
    if (!check_variety(a, variety).ok) return;
    // the center is determined by the knot table; carry it when it exists
    try {
      a.center = find_center(a);
    } catch (const MultipleFixedPoints&) {
    }
    out.push_back(std::move(a));
  };

  if (variety == "kleene") {
    for (auto& knot : kleene_knot_tables(lattice))
      emit(std::move(knot), std::nullopt);
  } else {
    for (const auto& knot : kleene_knot_tables(lattice)) {
      AntitoneTableScan scan(lattice);
      do {
        if (!scan.monotone_reversing()) continue;
        std::vector<int> neg = scan.extend();
        if (neg[lattice.bottom()] != lattice.top() ||
            neg[lattice.top()] != lattice.bottom())
          continue;
        // N4 pointwise; the full axiom suite decides afterwards
        bool n4 = true;
        for (int x = 0; x < lattice.size(); ++x)
          if (!lattice.leq(knot[x], neg[x])) {
            n4 = false;
            break;
          }
        if (n4) emit(knot, std::move(neg));
      } while (scan.next());
    }
  }

  if (options.dedup) {
    Signature sig = {Symbol::join, Symbol::meet, Symbol::zero, Symbol::one,
                     Symbol::knot};
    if (variety != "kleene") sig.insert(Symbol::neg);
    std::vector<Algebra> unique;
    for (const Algebra& a : out) {
      bool fresh = true;
      for (const Algebra& u : unique)
        if (find_isomorphism(a, u, sig)) {
          fresh = false;
          break;
        }
      if (fresh) unique.push_back(a);
    }
    out = std::move(unique);
  }

  // names must stay contiguous after dedup
  for (size_t i = 0; i < out.size(); ++i)
    out[i].name = variety + "-" + std::to_string(i);
  return out;
}

Corpus build_default_corpus(int max_irreducibles) {
  Corpus corpus;
  int lattice_id = 0;
  for (int n = 1; n <= max_irreducibles; ++n) {
    for (const Poset& p : enumerate_posets(n)) {
      FinLattice lat = downset_lattice(p);
      EnumOptions opts;
      opts.dedup = true;
      opts.max_size = lat.size();  // generated lattices set their own bound
      std::vector<Algebra> structures =
          enumerate_operator_pairs(lat, "kan", opts);
      std::string base = "L" + std::to_string(lattice_id);
      for (size_t k = 0; k < structures.size(); ++k) {
        Algebra a = structures[k];
        a.name = base + "-kan-" + std::to_string(k);
        CorpusEntry entry;
        entry.skan = check_variety(a, "skan").ok;
        entry.kanc = a.center.has_value();
        entry.skanc = entry.skan && entry.kanc;
        entry.algebra = std::move(a);
        corpus.entries.push_back(std::move(entry));
      }
      corpus.lattices.push_back(std::move(lat));
      ++lattice_id;
    }
  }
  return corpus;
}

int write_corpus(const Corpus& corpus, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "'");
  int written = 0;
  for (const auto& entry : corpus.entries) {
    std::string path = dir + "/" + entry.algebra.name + ".alg";
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << print_algebra(entry.algebra);
    ++written;
  }
  return written;
}

}  // namespace kanforge
