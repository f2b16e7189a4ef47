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

#include "kanforge/term.hpp"

#include <algorithm>

#include "kanforge/errors.hpp"

namespace kanforge {

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->var = std::move(name);
  return Term(std::move(n));
}

Term Term::constant(ConstKind c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->cnst = c;
  return Term(std::move(n));
}

Term Term::unary(UnaryOp op, Term child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::unary;
  n->un = op;
  n->a = std::move(child.node_);
  return Term(std::move(n));
}

Term Term::binary(BinaryOp op, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::binary;
  n->bin = op;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Term(std::move(n));
}

void Term::collect_variables(std::vector<std::string>& out) const {
  switch (kind()) {
    case Kind::variable:
      if (std::find(out.begin(), out.end(), var_name()) == out.end())
        out.push_back(var_name());
      return;
    case Kind::constant: return;
    case Kind::unary: child().collect_variables(out); return;
    case Kind::binary:
      lhs().collect_variables(out);
      rhs().collect_variables(out);
      return;
  }
}

Signature Term::required_symbols() const {
  Signature sig;
  switch (kind()) {
    case Kind::variable: return sig;
    case Kind::constant:
      if (const_kind() == ConstKind::center) sig.insert(Symbol::center);
      return sig;
    case Kind::unary: {
      sig = child().required_symbols();
      switch (unary_op()) {
        case UnaryOp::knot: sig.insert(Symbol::knot); break;
        case UnaryOp::neg: sig.insert(Symbol::neg); break;
        case UnaryOp::star: sig.insert(Symbol::star); break;
        case UnaryOp::diamond:
        case UnaryOp::box:
          sig.insert(Symbol::knot);
          sig.insert(Symbol::neg);
          break;
      }
      return sig;
    }
    case Kind::binary: {
      sig = lhs().required_symbols();
      for (Symbol s : rhs().required_symbols()) sig.insert(s);
      return sig;
    }
  }
  return sig;
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::variable: return var_name();
    case Kind::constant:
      switch (const_kind()) {
        case ConstKind::zero: return "0";
        case ConstKind::one: return "1";
        case ConstKind::center: return "c";
      }
      return "?";
    case Kind::unary: {
      std::string inner = child().to_string();
      if (child().kind() == Kind::binary) inner = "(" + inner + ")";
      switch (unary_op()) {
        case UnaryOp::knot: return "~" + inner;
        case UnaryOp::neg: return "!" + inner;
        case UnaryOp::star: return inner + "*";
        case UnaryOp::diamond: return "<>" + inner;
        case UnaryOp::box: return "[]" + inner;
      }
      return "?";
    }
    case Kind::binary: {
      std::string a = lhs().to_string(), b = rhs().to_string();
      if (lhs().kind() == Kind::binary) a = "(" + a + ")";
      if (rhs().kind() == Kind::binary) b = "(" + b + ")";
      return a + (binary_op() == BinaryOp::join ? " v " : " ^ ") + b;
    }
  }
  return "?";
}

Equation leq_equation(Term s, Term t) {
  return Equation{meet(s, std::move(t)), s};
}

Identity make_identity(std::string name, Term lhs, Term rhs) {
  Identity id{std::move(name), Equation{lhs, rhs}, {}};
  lhs.collect_variables(id.variables);
  rhs.collect_variables(id.variables);
  return id;
}

Identity make_leq_identity(std::string name, Term s, Term t) {
  Equation eq = leq_equation(s, std::move(t));
  Identity id{std::move(name), eq, {}};
  eq.lhs.collect_variables(id.variables);
  eq.rhs.collect_variables(id.variables);
  return id;
}

QuasiIdentity make_quasi(std::string name, std::vector<Equation> hypotheses,
                         Equation conclusion) {
  QuasiIdentity qi{std::move(name), std::move(hypotheses), std::move(conclusion),
                   {}};
  for (const auto& h : qi.hypotheses) {
    h.lhs.collect_variables(qi.variables);
    h.rhs.collect_variables(qi.variables);
  }
  qi.conclusion.lhs.collect_variables(qi.variables);
  qi.conclusion.rhs.collect_variables(qi.variables);
  return qi;
}

std::string Counterexample::to_string() const {
  std::string out;
  for (size_t i = 0; i < bindings.size(); ++i) {
    if (i) out += ", ";
    out += bindings[i].first + "=" + bindings[i].second;
  }
  return out;
}

namespace {

int eval_node(const Term& t, const Algebra& a,
              const std::vector<std::pair<std::string, int>>& env) {
  switch (t.kind()) {
    case Term::Kind::variable: {
      for (const auto& [name, value] : env)
        if (name == t.var_name()) return value;
      throw UnboundVariable("variable '" + t.var_name() +
                            "' is not bound by the assignment");
    }
    case Term::Kind::constant:
      switch (t.const_kind()) {
        case ConstKind::zero: return a.lattice.bottom();
        case ConstKind::one: return a.lattice.top();
        case ConstKind::center:
          if (!a.center)
            throw MissingOperation(
                "algebra '" + a.name + "' has no center element", "center");
          return *a.center;
      }
      return -1;
    case Term::Kind::unary: {
      int x = eval_node(t.child(), a, env);
      switch (t.unary_op()) {
        case UnaryOp::knot: return a.apply_unary(Symbol::knot, x);
        case UnaryOp::neg: return a.apply_unary(Symbol::neg, x);
        case UnaryOp::star: return a.apply_unary(Symbol::star, x);
        // <>t rewrites to ~!t, []t to !~t
        case UnaryOp::diamond:
          return a.apply_unary(Symbol::knot, a.apply_unary(Symbol::neg, x));
        case UnaryOp::box:
          return a.apply_unary(Symbol::neg, a.apply_unary(Symbol::knot, x));
      }
      return -1;
    }
    case Term::Kind::binary: {
      int x = eval_node(t.lhs(), a, env);
      int y = eval_node(t.rhs(), a, env);
      return t.binary_op() == BinaryOp::join ? a.lattice.join(x, y)
                                             : a.lattice.meet(x, y);
    }
  }
  return -1;
}

Counterexample describe(const Algebra& a,
                        const std::vector<std::string>& variables,
                        const std::vector<int>& values, const Equation& eq,
                        int lhs, int rhs) {
  Counterexample cex;
  for (size_t i = 0; i < variables.size(); ++i)
    cex.bindings.emplace_back(variables[i], a.name_of(values[i]));
  cex.detail = eq.lhs.to_string() + " = " + a.name_of(lhs) + " but " +
               eq.rhs.to_string() + " = " + a.name_of(rhs);
  return cex;
}

/// Walks assignments in variable-major lexicographic order: the first
/// declared variable is the most significant position.
template <typename Fn>
CheckResult scan_assignments(const Algebra& a,
                             const std::vector<std::string>& variables,
                             Fn&& test) {
  const int n = a.size();
  const size_t k = variables.size();
  std::vector<int> values(k, 0);
  std::vector<std::pair<std::string, int>> env(k);
  while (true) {
    for (size_t i = 0; i < k; ++i) env[i] = {variables[i], values[i]};
    CheckResult r = test(values, env);
    if (!r.holds) return r;
    size_t pos = k;
    while (pos > 0) {
      if (++values[pos - 1] < n) break;
      values[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return CheckResult{true, std::nullopt};
}

}  // namespace

int evaluate(const Term& term, const Algebra& algebra,
             const std::vector<std::pair<std::string, int>>& assignment) {
  return eval_node(term, algebra, assignment);
}

CheckResult check_identity(const Identity& id, const Algebra& algebra) {
  return scan_assignments(
      algebra, id.variables,
      [&](const std::vector<int>& values,
          const std::vector<std::pair<std::string, int>>& env) {
        int l = eval_node(id.eq.lhs, algebra, env);
        int r = eval_node(id.eq.rhs, algebra, env);
        if (l == r) return CheckResult{true, std::nullopt};
        return CheckResult{
            false, describe(algebra, id.variables, values, id.eq, l, r)};
      });
}

CheckResult check_quasi_identity(const QuasiIdentity& qi,
                                 const Algebra& algebra) {
  return scan_assignments(
      algebra, qi.variables,
      [&](const std::vector<int>& values,
          const std::vector<std::pair<std::string, int>>& env) {
        for (const auto& h : qi.hypotheses)
          if (eval_node(h.lhs, algebra, env) != eval_node(h.rhs, algebra, env))
            return CheckResult{true, std::nullopt};
        int l = eval_node(qi.conclusion.lhs, algebra, env);
        int r = eval_node(qi.conclusion.rhs, algebra, env);
        if (l == r) return CheckResult{true, std::nullopt};
        return CheckResult{false, describe(algebra, qi.variables, values,
                                           qi.conclusion, l, r)};
      });
}

}  // namespace kanforge
