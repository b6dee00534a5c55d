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

#include "jscoh/linalg.hpp"

#include <utility>

namespace jscoh {

void ExactMatrix::append_row(ScalarVec row) {
    if (row.size() != cols)
        throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                                " appended to matrix with " + std::to_string(cols) + " columns");
    rows.push_back(std::move(row));
}

ExactMatrix matrix_from_rows(std::vector<ScalarVec> rows, std::size_t cols) {
    ExactMatrix m(cols);
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

namespace {

// Elimination kernel shared by the rational fast path and the Q(t) path.
template <class F>
std::vector<std::size_t> rref_in_place(std::vector<std::vector<F>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < a.size(); ++col) {
        std::size_t sel = prow;
        while (sel < a.size() && a[sel][col].is_zero()) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[prow], a[sel]);
        F inv = a[prow][col].inverse();
        for (std::size_t c = col; c < cols; ++c)
            if (!a[prow][c].is_zero()) a[prow][c] = a[prow][c] * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == prow || a[r][col].is_zero()) continue;
            F f = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!a[prow][c].is_zero()) a[r][c] = a[r][c] - f * a[prow][c];
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

bool all_constant(const ExactMatrix& m) {
    for (const auto& row : m.rows)
        for (const auto& e : row)
            if (!e.is_constant()) return false;
    return true;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
    RrefResult out;
    out.matrix.cols = m.cols;
    out.matrix.col_labels = m.col_labels;
    if (all_constant(m)) {
        std::vector<std::vector<Rational>> a(m.row_count());
        for (std::size_t r = 0; r < m.row_count(); ++r) {
            a[r].reserve(m.cols);
            for (const auto& e : m.rows[r]) a[r].push_back(e.as_rational());
        }
        out.pivots = rref_in_place(a, m.cols);
        out.matrix.rows.resize(a.size());
        for (std::size_t r = 0; r < a.size(); ++r) {
            out.matrix.rows[r].reserve(m.cols);
            for (auto& e : a[r]) out.matrix.rows[r].emplace_back(e);
        }
        return out;
    }
    std::vector<ScalarVec> a = m.rows;
    out.pivots = rref_in_place(a, m.cols);
    out.matrix.rows = std::move(a);
    return out;
}

std::size_t rank(const ExactMatrix& m) {
    return rref(m).pivots.size();
}

std::vector<ScalarVec> nullspace(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<ScalarVec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        ScalarVec v(m.cols, Scalar());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.matrix.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarVec EchelonAccumulator::reduce(ScalarVec v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length does not match column count");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& f = v[pivots_[i]];
        if (f.is_zero()) continue;
        Scalar c = f;  // rows_ have unit pivots
        for (std::size_t j = 0; j < cols_; ++j)
            if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
    return v;
}

bool EchelonAccumulator::insert(const ScalarVec& v) {
    ScalarVec r = reduce(v);
    std::size_t p = 0;
    while (p < cols_ && r[p].is_zero()) ++p;
    if (p == cols_) return false;
    Scalar inv = r[p].inverse();
    for (auto& e : r) e = e * inv;
    // keep existing rows reduced against the new one
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& f = rows_[i][p];
        if (f.is_zero()) continue;
        Scalar c = f;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!r[j].is_zero()) rows_[i][j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool EchelonAccumulator::contains(const ScalarVec& v) const {
    ScalarVec r = reduce(v);
    for (const auto& e : r)
        if (!e.is_zero()) return false;
    return true;
}

bool rowspace_contains(const ExactMatrix& m, const ScalarVec& v) {
    if (v.size() != m.cols) throw DimensionMismatch("vector length does not match column count");
    EchelonAccumulator acc(m.cols);
    for (const auto& row : m.rows) acc.insert(row);
    return acc.contains(v);
}

std::vector<ScalarVec> quotient_basis(const std::vector<ScalarVec>& Z,
                                      const std::vector<ScalarVec>& B) {
    std::size_t cols = 0;
    if (!Z.empty()) cols = Z[0].size();
    else if (!B.empty()) cols = B[0].size();
    EchelonAccumulator zspan(cols);
    for (const auto& z : Z) zspan.insert(z);
    for (const auto& b : B)
        if (!zspan.contains(b)) throw NotASubspace("coboundary basis vector outside span(Z)");
    EchelonAccumulator acc(cols);
    for (const auto& b : B) acc.insert(b);
    std::vector<ScalarVec> reps;
    for (const auto& z : Z)
        if (acc.insert(z)) reps.push_back(z);
    return reps;
}

}  // namespace jscoh
