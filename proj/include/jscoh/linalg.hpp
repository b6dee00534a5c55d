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
 * Deterministic exact dense linear algebra over Scalar.
 *
 * Pivoting is always "first nonzero entry, scanning top-down" -- there is no
 * magnitude to compare over an exact field, and fixed pivoting keeps every
 * basis this module emits reproducible. When a matrix has only constant
 * entries the elimination runs over plain rationals.
 */

#ifndef JSCOH_LINALG_HPP
#define JSCOH_LINALG_HPP

#include <string>
#include <vector>

#include "jscoh/errors.hpp"
#include "jscoh/field.hpp"

namespace jscoh {

using ScalarVec = std::vector<Scalar>;

struct ExactMatrix {
    std::vector<ScalarVec> rows;
    std::size_t cols = 0;
    std::vector<std::string> col_labels;  // optional, empty or size == cols

    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t ncols) : cols(ncols) {}

    std::size_t row_count() const { return rows.size(); }
    void append_row(ScalarVec row);
    const Scalar& at(std::size_t r, std::size_t c) const { return rows[r][c]; }
};

struct RrefResult {
    ExactMatrix matrix;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

/// Reduced row-echelon form with pivots scaled to 1.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel: one vector per free column, the free-column
/// entry set to 1, emitted in ascending free-column order.
std::vector<ScalarVec> nullspace(const ExactMatrix& m);

bool rowspace_contains(const ExactMatrix& m, const ScalarVec& v);

/// Greedy subset of Z whose classes form a basis of span(Z)/span(B).
/// Throws NotASubspace when some element of B falls outside span(Z).
std::vector<ScalarVec> quotient_basis(const std::vector<ScalarVec>& Z,
                                      const std::vector<ScalarVec>& B);

/// Incremental row-echelon accumulator; rows are kept fully reduced.
class EchelonAccumulator {
  public:
    explicit EchelonAccumulator(std::size_t cols) : cols_(cols) {}

    /// Reduce v against the accumulated rows; returns the residual.
    ScalarVec reduce(ScalarVec v) const;
    /// Insert v if independent of the span so far; true when inserted.
    bool insert(const ScalarVec& v);
    bool contains(const ScalarVec& v) const;
    std::size_t rank() const { return rows_.size(); }

  private:
    std::size_t cols_;
    std::vector<ScalarVec> rows_;       // each with pivot scaled to 1
    std::vector<std::size_t> pivots_;   // pivot column of rows_[i]
};

ExactMatrix matrix_from_rows(std::vector<ScalarVec> rows, std::size_t cols);

}  // namespace jscoh

#endif
