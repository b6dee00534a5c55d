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
 * Superbimodules and split-null extensions.
 *
 * Only the left action lambda[i][p][q] (b_i . m_p = sum_q lambda m_q) is
 * stored. The right action is always the derived one,
 * m . b = (-1)^{|m||b|} b . m, which is what makes the extension
 * supercommutative by construction.
 */

#ifndef JSCOH_BIMODULE_HPP
#define JSCOH_BIMODULE_HPP

#include <vector>

#include "jscoh/superalgebra.hpp"

namespace jscoh {

class SuperBimodule {
  public:
    SuperBimodule() = default;
    SuperBimodule(GradedBasis basis, std::vector<Parity> algebra_parities,
                  std::vector<Scalar> left_action);

    const GradedBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.dim(); }
    std::size_t algebra_dim() const { return algebra_parities_.size(); }
    Parity parity(std::size_t p) const { return basis_.parity(p); }
    Parity algebra_parity(std::size_t i) const { return algebra_parities_[i]; }
    const Scalar& lambda(std::size_t i, std::size_t p, std::size_t q) const {
        return action_[(i * dim() + p) * dim() + q];
    }
    Scalar& lambda_mut(std::size_t i, std::size_t p, std::size_t q) {
        return action_[(i * dim() + p) * dim() + q];
    }

    /// b_i . m for a module element m (coefficient vector).
    std::vector<Scalar> act_left(std::size_t i, const std::vector<Scalar>& m) const;
    /// m . b_j with the derived supercommutative sign.
    std::vector<Scalar> act_right(const std::vector<Scalar>& m, std::size_t j) const;

  private:
    GradedBasis basis_;
    std::vector<Parity> algebra_parities_;
    std::vector<Scalar> action_;
};

/// Module copy of A's own space, action = multiplication; module names get
/// a tilde prefix ("~e1").
SuperBimodule regular_bimodule(const SuperAlgebra& A);

/// Parity-shifted copy of the regular module: same underlying space with
/// parities flipped and the left action twisted by (-1)^{|a|}. This is the
/// coefficient module under which degree-1 bilinear forms are the diagonal
/// restriction of ordinary (degree-0) forms; kept as a diagnostic aid.
SuperBimodule shifted_regular_bimodule(const SuperAlgebra& A);

struct ExtensionAlgebra {
    SuperAlgebra algebra;
    std::vector<std::size_t> algebra_index;  // algebra basis index -> extension index
    std::vector<std::size_t> module_index;   // module basis index  -> extension index
};

/// J + M with the J table, action blocks, and M.M = 0.
ExtensionAlgebra split_null_extension(const SuperAlgebra& A, const SuperBimodule& M);

/// Supercommutativity and the degree-4 identity on the split-null
/// extension; sj1 violations precede sj2 violations in the report.
IdentityReport check_bimodule(const SuperAlgebra& A, const SuperBimodule& M);

}  // namespace jscoh

#endif
