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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/term.hpp"

namespace kanforge {

/// One named law.  A law may bundle several equations and conditional
/// equations; it holds when all of them do.
struct Law {
  std::string name;
  std::vector<Identity> identities;
  std::vector<QuasiIdentity> quasis;

  std::string statement() const;
};

struct LawResult {
  std::string law;
  bool holds = false;
  std::string failed_part;  // name of the failing identity/quasi-identity
  std::optional<Counterexample> counterexample;
};

/// A named list of laws with the signature it needs.
struct Suite {
  std::string name;
  std::string description;
  Signature required;
  std::vector<Law> laws;
};

struct SuiteResult {
  std::string suite;
  bool ok = false;
  std::vector<LawResult> laws;

  int passed() const;
  int total() const { return static_cast<int>(laws.size()); }
};

/// The full catalog.  Suite names are stable identifiers: kleene, kan-axioms,
/// pdl, stone, stone-kan, prop1, prop3, centered, modal-normal, moisil,
/// lemma-t, lemma5.8, auxiliar1, lemma2.23, lemma-aux.
const std::vector<Suite>& builtin_suites();

/// Throws UnknownSuite.
const Suite& suite_by_name(const std::string& name);

LawResult check_law(const Law& law, const Algebra& algebra);
SuiteResult run_suite(const Suite& suite, const Algebra& algebra);

}  // namespace kanforge
