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
 * Second cohomology of a structure-constant superalgebra with coefficients
 * in a superbimodule.
 *
 * The unknown is a bilinear form h : J x J -> M of fixed degree k, stored as
 * a full (i, j) tensor over the grading-admissible coefficient layout; the
 * symmetry h(a,b) = (-1)^{|a||b|} h(b,a) is imposed as explicit constraint
 * rows rather than folded into the indexing.
 *
 * The degree-4 constraint rows are generated mechanically: the split-null
 * extension is evaluated with the perturbed product a * b = ab + h(a, b),
 * where h is carried symbolically as a vector of formal unknowns, and the
 * degree-4 identity residual is collected per basis quadruple and module
 * coordinate. The pure-algebra part of the residual cancels whenever the
 * algebra itself satisfies the identity, so every emitted row is a
 * homogeneous linear equation in the h coefficients. No transcription of a
 * printed identity is involved; `paper_identity_check` evaluates printed
 * sign conventions separately so the two routes stay independent.
 */

#ifndef JSCOH_COHOMOLOGY_HPP
#define JSCOH_COHOMOLOGY_HPP

#include <array>
#include <string>
#include <vector>

#include "jscoh/bimodule.hpp"
#include "jscoh/linalg.hpp"
#include "jscoh/superalgebra.hpp"

namespace jscoh {

/// Ordered coefficient layout for degree-k bilinear forms: one column per
/// grading-admissible triple (i, j, q), lexicographic.
struct CochainLayout {
    Parity parity = 0;
    struct Column {
        int i, j, q;
    };
    std::vector<Column> columns;
    std::size_t algebra_dim = 0, module_dim = 0;
    std::vector<int> lookup;  // (i*n + j)*m + q -> column index or -1

    std::size_t size() const { return columns.size(); }
    int col_of(std::size_t i, std::size_t j, std::size_t q) const {
        return lookup[(i * algebra_dim + j) * module_dim + q];
    }
    bool same_shape(const CochainLayout& o) const {
        return parity == o.parity && algebra_dim == o.algebra_dim && module_dim == o.module_dim;
    }
};

struct RowTag {
    enum class Kind { Supersymmetry, Jordan } kind;
    std::array<int, 4> quad;  // ss rows use {i, j, -1, -1}
    int module_coord;
};

struct CocycleSystem {
    CochainLayout layout;
    ExactMatrix constraints;
    std::vector<RowTag> provenance;
};

struct Cocycle {
    Parity parity = 0;
    ScalarVec coeffs;  // over the layout columns
};

struct CohomologyReport {
    Parity parity = 0;
    std::size_t dim_Z = 0, dim_B = 0, dim_H = 0;
    std::vector<Cocycle> Z_basis, B_basis, H_representatives;
};

/// Printed: the coboundary exactly as (delta mu)(a,b) = -mu(ab) + a.mu(b)
/// + mu(a).b for both parities of mu. SignedOdd: inserts (-1)^{|mu||a|} on
/// the a.mu(b) term.
enum class CoboundaryVariant { Printed, SignedOdd };

/// Sign of the last right-hand term of the degree-4 h-identity:
/// Printed uses (-1)^{|d|(|c|+|d|)}, Derived uses (-1)^{|d|(|c|+|b|)}
/// (the exponent produced by mechanical expansion).
enum class IdentitySignVariant { Printed, Derived };

CochainLayout enumerate_unknowns(const SuperAlgebra& A, const SuperBimodule& M, Parity k);

/// One row per unordered basis pair and admissible module coordinate:
/// h(b_i, b_j)_q - (-1)^{|i||j|} h(b_j, b_i)_q = 0.
ExactMatrix supersymmetry_rows(const SuperAlgebra& A, const SuperBimodule& M,
                               const CochainLayout& layout);

/// Mechanically generated degree-4 rows, lexicographic in (quadruple,
/// module coordinate), zero rows skipped.
ExactMatrix jordan_cocycle_rows(const SuperAlgebra& A, const SuperBimodule& M,
                                const CochainLayout& layout);

/// Supersymmetry rows stacked over jordan rows, with per-row provenance.
CocycleSystem build_cocycle_system(const SuperAlgebra& A, const SuperBimodule& M, Parity k);

/// Basis of Z^2_k: nullspace of the stacked constraint matrix.
std::vector<Cocycle> cocycle_space(const SuperAlgebra& A, const SuperBimodule& M, Parity k);

/// Matrix of mu -> delta mu from graded degree-k maps J -> M (columns:
/// admissible (algebra index, module index) pairs, lexicographic) to the
/// layout coefficient space.
ExactMatrix coboundary_matrix(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                              CoboundaryVariant variant = CoboundaryVariant::Printed);

/// Basis of B^2_k: the cocycles of the form delta mu, i.e. the image of
/// the coboundary map intersected with the cocycle space. (For even mu the
/// image is contained in Z^2 outright; for odd mu it need not be, and only
/// the cocycle part represents extensions equivalent to the split one.)
std::vector<Cocycle> coboundary_space(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                                      CoboundaryVariant variant = CoboundaryVariant::Printed);

CohomologyReport cohomology_group(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                                  CoboundaryVariant variant = CoboundaryVariant::Printed);

/// J + M with the J-block perturbed by h into module coordinates; M.M = 0.
ExtensionAlgebra extension_by_cocycle(const SuperAlgebra& A, const SuperBimodule& M,
                                      const Cocycle& h);

/// True iff every expected vector lies in span(Z) and expected together
/// with the coboundary basis spans exactly span(Z).
bool verify_representative_span(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                                const std::vector<Cocycle>& expected);

/// Evaluates the printed degree-4 h-identity
///   F(a,b,c,d) + (-1)^{|b|(|c|+|d|)+|c||d|} F(a,d,c,b)
///     + (-1)^{|a|(|b|+|c|+|d|)+|c||d|} F(b,d,c,a)
///   = G(a,b,c,d) + (-1)^{|b||c|} G(a,c,b,d) + s G(a,d,b,c)
/// with F(a,b,c,d) = h((ab)c,d) + h(ab,c).d + (h(a,b).c).d and
/// G(a,b,c,d) = h(ab,cd) + h(a,b).(cd) + (ab).h(c,d), where s is chosen by
/// the variant, on all homogeneous basis quadruples of a concrete h.
IdentityReport paper_identity_check(const SuperAlgebra& A, const SuperBimodule& M,
                                    const Cocycle& h, IdentitySignVariant variant);

}  // namespace jscoh

#endif
