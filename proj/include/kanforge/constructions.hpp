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

#include <string>
#include <vector>

#include "kanforge/morphism.hpp"

namespace kanforge {

/// Where a constructed element came from.
struct Provenance {
  enum class Kind { pair, cls, element };
  Kind kind = Kind::element;
  int first = -1, second = -1;  // pair of source indices
  std::vector<int> members;     // congruence class, sorted source indices
  int source = -1;              // single source index

  static Provenance of_pair(int a, int b) {
    Provenance p;
    p.kind = Kind::pair;
    p.first = a;
    p.second = b;
    return p;
  }
  static Provenance of_class(std::vector<int> m) {
    Provenance p;
    p.kind = Kind::cls;
    p.members = std::move(m);
    return p;
  }
  static Provenance of_element(int s) {
    Provenance p;
    p.kind = Kind::element;
    p.source = s;
    return p;
  }
};

/// A construction output: a full algebra with explicit tables plus the
/// per-element origin record.
struct ConstructedAlgebra {
  Algebra algebra;
  std::string tag;
  std::vector<Provenance> provenance;

  /// Index of the element with pair provenance (a, b); -1 when absent.
  int pair_index(int a, int b) const;
  /// Index of the class containing source element s; -1 when absent.
  int class_index(int s) const;
  /// Index of the element with single-source provenance s; -1 when absent.
  int element_index(int s) const;
};

/// Disjoint-pair algebra over a distributive p-algebra: carrier
/// {(x,y) : x ^ y = 0}, with ~(a,b) = (b,a), !(a,b) = (a*, a) and center
/// (0,0).  The result is a centered KAN-algebra.  Throws NotPDL.
ConstructedAlgebra kalman(const Algebra& a);

/// Pair algebra {(x,y) in T-dia x T-box : x <= y} with componentwise order,
/// ~(a,b) = (~b,~a), !(a,b) = (<>!a, ~a) and center (0,1).  The result is a
/// centered KAN-algebra.  Throws NotKAN.
ConstructedAlgebra monteiro(const Algebra& t);

/// Up-set of the center with star x = !x v c.  Throws NotKAN, NotCentered.
ConstructedAlgebra center_slice(const Algebra& t);

/// Fixed points of <> with meet <>(x ^ y) and star <>!x.  Throws NotKAN.
ConstructedAlgebra diamond_subalgebra(const Algebra& t);

/// Fixed points of [] with join [](x v y); star is the computed
/// pseudocomplement when total.  Throws NotKAN.
ConstructedAlgebra box_subalgebra(const Algebra& t);

/// Quotient by the congruence identifying x, y with !x = !y.  Class
/// representatives are minimum-index members; well-definedness of the class
/// operations is verified across representatives first.  Throws NotKAN,
/// CongruenceViolation.
ConstructedAlgebra theta_quotient(const Algebra& t);

/// Recognized construction tags: kalman, monteiro, center-slice, diamond,
/// box, theta.
ConstructedAlgebra apply_construction(const std::string& tag,
                                      const Algebra& a);

// Canonical maps.  Each returns the mapping bundled with freshly constructed
// domain and codomain algebras and an eager verification record.

/// theta quotient -> diamond subalgebra, class of x to <>x.
Morphism map_phi(const Algebra& t);
/// diamond subalgebra -> center slice, x to x v c.
Morphism map_h(const Algebra& t);
/// a -> center_slice(kalman(a)), x to (x, 0).
Morphism map_alpha(const Algebra& a);
/// t -> kalman(center_slice(t)), x to (x v c, ~x v c).
Morphism map_beta(const Algebra& t);
/// t -> monteiro(t), x to (<>x, []x); an embedding.
Morphism map_delta(const Algebra& t);
/// monteiro(t) -> kalman(diamond_subalgebra(t)), (x, y) to (x, ~y).
Morphism map_t(const Algebra& t);

/// Functorial action on maps.  Tags: kalman (pairs), center-slice
/// (restriction), monteiro (pairs), diamond (image under <>), theta
/// (classes).  The morphism must be a homomorphism between objects of the
/// functor's source category.  Throws NotAHomomorphism, WrongCategory,
/// CongruenceViolation.
Morphism lift_morphism(const Morphism& f, const std::string& tag);

}  // namespace kanforge
