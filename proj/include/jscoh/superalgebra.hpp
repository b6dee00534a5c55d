/*
   Copyright 2026 jscoh contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * Z2-graded algebras given by structure constants, with the two defining
 * identity checks.
 *
 * Sign conventions used throughout (parities written |a| in {0,1}):
 *
 *   supercommutativity      a b = (-1)^{|a||b|} b a
 *
 *   degree-4 identity       ((ab)c)d + (-1)^{|d|(|c|+|b|)+|b||c|} ((ad)c)b
 *                           + (-1)^{|a|(|b|+|c|+|d|)+|c||d|} ((bd)c)a
 *                         = (ab)(cd) + (-1)^{|d|(|c|+|b|)} (ad)(bc)
 *                           + (-1)^{|c||b|} (ac)(bd)
 *
 * The degree-4 form is the full linearization of (x^2 y) x = x^2 (y x)
 * carried through the Grassmann envelope; over a characteristic-zero field
 * both identities hold for all elements iff they hold on homogeneous basis
 * tuples, which is what the checks scan.
 */

#ifndef JSCOH_SUPERALGEBRA_HPP
#define JSCOH_SUPERALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jscoh/errors.hpp"
#include "jscoh/field.hpp"
#include "jscoh/linalg.hpp"

namespace jscoh {

using Parity = int;  // 0 or 1, arithmetic mod 2

/// Basis names in canonical order: even elements first, then odd.
class GradedBasis {
  public:
    GradedBasis() = default;
    GradedBasis(std::vector<std::string> even, std::vector<std::string> odd);

    std::size_t dim() const { return names_.size(); }
    std::size_t even_dim() const { return even_dim_; }
    Parity parity(std::size_t i) const { return i < even_dim_ ? 0 : 1; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& name) const;

  private:
    std::vector<std::string> names_;
    std::size_t even_dim_ = 0;
};

using Element = std::vector<Scalar>;

struct IdentityViolation {
    std::array<int, 4> where;  // basis indices; unused slots are -1
    Element residual;
};

struct IdentityReport {
    bool passed = true;
    std::vector<IdentityViolation> violations;
};

/// Structure-constant algebra b_i b_j = sum_k gamma[i][j][k] b_k.
/// The table is stored as given; the identity checks below are the
/// arbiters of supercommutativity and Jordan-ness.
class SuperAlgebra {
  public:
    SuperAlgebra() = default;
    SuperAlgebra(GradedBasis basis, std::vector<Scalar> table);

    const GradedBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.dim(); }
    Parity parity(std::size_t i) const { return basis_.parity(i); }
    const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim() + j) * dim() + k];
    }
    Scalar& gamma_mut(std::size_t i, std::size_t j, std::size_t k) {
        return table_[(i * dim() + j) * dim() + k];
    }
    const std::vector<Scalar>& table() const { return table_; }

    Element product(const Element& u, const Element& v) const;
    /// Product of two basis elements, as an Element.
    Element basis_product(std::size_t i, std::size_t j) const;

    IdentityReport check_supercommutative() const;
    /// Scans the degree-4 identity over all n^4 homogeneous basis
    /// quadruples; violations are listed in lexicographic order.
    IdentityReport check_jordan() const;

    /// Left-hand side minus right-hand side of the degree-4 identity at
    /// basis quadruple (i, j, k, l).
    Element jordan_residual(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

    /// Specialize every table entry at t = r.
    SuperAlgebra specialize(const Rational& r) const;
    /// True when some table entry involves t.
    bool depends_on_t() const;

  private:
    GradedBasis basis_;
    std::vector<Scalar> table_;
};

/// The 4-dimensional algebra with even idempotents e1, e2, odd x, y and
/// nonzero products e_i^2 = e_i, e_i x = x/2, e_i y = y/2, xy = e1 + t e2.
SuperAlgebra builtin_dt(const Scalar& t);

/// 2x2 matrix units under the super-symmetrized product, grading 1|1:
/// even E11, E22, odd E12, E21.
SuperAlgebra builtin_m11plus();

/// True iff phi (a dim(B) x dim(A) coordinate matrix) is parity-preserving,
/// invertible, and multiplicative on all basis pairs.
bool check_isomorphism(const SuperAlgebra& A, const SuperAlgebra& B, const ExactMatrix& phi);

}  // namespace jscoh

#endif
