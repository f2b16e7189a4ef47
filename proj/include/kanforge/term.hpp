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

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kanforge/algebra.hpp"

namespace kanforge {

enum class ConstKind { zero, one, center };
enum class UnaryOp { knot, neg, star, diamond, box };
enum class BinaryOp { join, meet };

/// Immutable syntax tree over the signature {v, ^, ~, !, *, <>, [], 0, 1, c}.
/// The derived operators evaluate by rewriting: <>t as ~!t and []t as !~t.
class Term {
 public:
  enum class Kind { variable, constant, unary, binary };

  static Term var(std::string name);
  static Term constant(ConstKind c);
  static Term unary(UnaryOp op, Term child);
  static Term binary(BinaryOp op, Term lhs, Term rhs);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->var; }
  ConstKind const_kind() const { return node_->cnst; }
  UnaryOp unary_op() const { return node_->un; }
  BinaryOp binary_op() const { return node_->bin; }
  Term child() const { return Term(node_->a); }
  Term lhs() const { return Term(node_->a); }
  Term rhs() const { return Term(node_->b); }

  /// Variable names in first-occurrence order, left to right.
  void collect_variables(std::vector<std::string>& out) const;

  /// Which symbols evaluation will need (diamond/box count as knot+neg).
  Signature required_symbols() const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string var;
    ConstKind cnst = ConstKind::zero;
    UnaryOp un = UnaryOp::knot;
    BinaryOp bin = BinaryOp::join;
    std::shared_ptr<const Node> a, b;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Short builders; identity suites read better with these.
inline Term v(std::string name) { return Term::var(std::move(name)); }
inline Term zero() { return Term::constant(ConstKind::zero); }
inline Term one() { return Term::constant(ConstKind::one); }
inline Term center_c() { return Term::constant(ConstKind::center); }
inline Term join(Term a, Term b) {
  return Term::binary(BinaryOp::join, std::move(a), std::move(b));
}
inline Term meet(Term a, Term b) {
  return Term::binary(BinaryOp::meet, std::move(a), std::move(b));
}
inline Term knot(Term a) { return Term::unary(UnaryOp::knot, std::move(a)); }
inline Term neg(Term a) { return Term::unary(UnaryOp::neg, std::move(a)); }
inline Term star(Term a) { return Term::unary(UnaryOp::star, std::move(a)); }
inline Term dia(Term a) { return Term::unary(UnaryOp::diamond, std::move(a)); }
inline Term box(Term a) { return Term::unary(UnaryOp::box, std::move(a)); }

struct Equation {
  Term lhs, rhs;
};

/// s <= t is encoded as the equation s ^ t = s.
Equation leq_equation(Term s, Term t);

/// A universally quantified equation.  Variables are listed in declaration
/// order; counterexample search assigns them in that order, elements in index
/// order, and reports the first failure.
struct Identity {
  std::string name;
  Equation eq;
  std::vector<std::string> variables;
};

struct QuasiIdentity {
  std::string name;
  std::vector<Equation> hypotheses;
  Equation conclusion;
  std::vector<std::string> variables;
};

/// Builds an Identity collecting variables in first-occurrence order.
Identity make_identity(std::string name, Term lhs, Term rhs);
Identity make_leq_identity(std::string name, Term s, Term t);
QuasiIdentity make_quasi(std::string name, std::vector<Equation> hypotheses,
                         Equation conclusion);

/// A variable binding list, reported with element names.
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string detail;  // which equation failed, with both side values

  std::string to_string() const;
};

struct CheckResult {
  bool holds = false;
  std::optional<Counterexample> counterexample;
};

/// Bottom-up evaluation by table lookup.  Throws MissingOperation when the
/// term uses a symbol the algebra lacks and UnboundVariable when the
/// assignment is not total on the term's variables.
int evaluate(const Term& term, const Algebra& algebra,
             const std::vector<std::pair<std::string, int>>& assignment);

/// Exhaustive scan over all |A|^k assignments.
CheckResult check_identity(const Identity& id, const Algebra& algebra);

/// Like check_identity but only assignments satisfying every hypothesis are
/// tested against the conclusion.
CheckResult check_quasi_identity(const QuasiIdentity& qi,
                                 const Algebra& algebra);

}  // namespace kanforge
