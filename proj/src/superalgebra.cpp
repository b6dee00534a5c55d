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

#include "jscoh/superalgebra.hpp"

#include <set>

namespace jscoh {

GradedBasis::GradedBasis(std::vector<std::string> even, std::vector<std::string> odd)
    : even_dim_(even.size()) {
    names_ = std::move(even);
    names_.insert(names_.end(), odd.begin(), odd.end());
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw InputError("empty basis name");
        if (!seen.insert(n).second) throw InputError("duplicate basis name '" + n + "'");
    }
}

std::optional<std::size_t> GradedBasis::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

SuperAlgebra::SuperAlgebra(GradedBasis basis, std::vector<Scalar> table)
    : basis_(std::move(basis)), table_(std::move(table)) {
    const std::size_t n = basis_.dim();
    if (table_.size() != n * n * n)
        throw DimensionMismatch("structure table size does not match basis dimension");
}

Element SuperAlgebra::product(const Element& u, const Element& v) const {
    const std::size_t n = dim();
    if (u.size() != n || v.size() != n)
        throw DimensionMismatch("element length does not match algebra dimension");
    Element out(n, Scalar());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& g = gamma(i, j, k);
                if (!g.is_zero()) out[k] += c * g;
            }
        }
    }
    return out;
}

Element SuperAlgebra::basis_product(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    Element out(n, Scalar());
    for (std::size_t k = 0; k < n; ++k) out[k] = gamma(i, j, k);
    return out;
}

IdentityReport SuperAlgebra::check_supercommutative() const {
    const std::size_t n = dim();
    IdentityReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int sign = (parity(i) * parity(j)) % 2 ? -1 : 1;
            Element res(n, Scalar());
            bool nonzero = false;
            for (std::size_t k = 0; k < n; ++k) {
                res[k] = sign < 0 ? gamma(i, j, k) + gamma(j, i, k)
                                  : gamma(i, j, k) - gamma(j, i, k);
                nonzero = nonzero || !res[k].is_zero();
            }
            if (nonzero) {
                rep.passed = false;
                rep.violations.push_back({{static_cast<int>(i), static_cast<int>(j), -1, -1},
                                          std::move(res)});
            }
        }
    }
    return rep;
}

namespace {

Element add_scaled(Element a, const Element& b, int sign) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (b[k].is_zero()) continue;
        if (sign > 0) a[k] += b[k];
        else a[k] -= b[k];
    }
    return a;
}

}  // namespace

Element SuperAlgebra::jordan_residual(std::size_t i, std::size_t j, std::size_t k,
                                      std::size_t l) const {
    const int pa = parity(i), pb = parity(j), pc = parity(k), pd = parity(l);
    const int s2 = (pd * (pc + pb) + pb * pc) % 2 ? -1 : 1;
    const int s3 = (pa * (pb + pc + pd) + pc * pd) % 2 ? -1 : 1;
    const int r2 = (pd * (pc + pb)) % 2 ? -1 : 1;
    const int r3 = (pc * pb) % 2 ? -1 : 1;

    Element a = basis_product(i, j);   // ab
    Element b = basis_product(i, l);   // ad
    Element c = basis_product(j, l);   // bd
    Element kl = basis_product(k, l);  // cd
    Element jk = basis_product(j, k);  // bc
    Element ik = basis_product(i, k);  // ac
    Element ek(dim(), Scalar()), el(dim(), Scalar()), ej(dim(), Scalar()), ei(dim(), Scalar());
    ek[k] = Scalar(1);
    el[l] = Scalar(1);
    ej[j] = Scalar(1);
    ei[i] = Scalar(1);

    Element lhs = product(product(a, ek), el);
    lhs = add_scaled(std::move(lhs), product(product(b, ek), ej), s2);
    lhs = add_scaled(std::move(lhs), product(product(c, ek), ei), s3);
    Element rhs = product(a, kl);
    rhs = add_scaled(std::move(rhs), product(b, jk), r2);
    rhs = add_scaled(std::move(rhs), product(ik, c), r3);
    return add_scaled(std::move(lhs), rhs, -1);
}

IdentityReport SuperAlgebra::check_jordan() const {
    const std::size_t n = dim();
    IdentityReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Element res = jordan_residual(i, j, k, l);
                    bool nonzero = false;
                    for (const auto& e : res) nonzero = nonzero || !e.is_zero();
                    if (nonzero) {
                        rep.passed = false;
                        rep.violations.push_back({{static_cast<int>(i), static_cast<int>(j),
                                                   static_cast<int>(k), static_cast<int>(l)},
                                                  std::move(res)});
                    }
                }
    return rep;
}

SuperAlgebra SuperAlgebra::specialize(const Rational& r) const {
    std::vector<Scalar> table;
    table.reserve(table_.size());
    for (const auto& e : table_) table.emplace_back(e.specialize(r));
    return SuperAlgebra(basis_, std::move(table));
}

bool SuperAlgebra::depends_on_t() const {
    for (const auto& e : table_)
        if (e.depends_on_t()) return true;
    return false;
}

SuperAlgebra builtin_dt(const Scalar& t) {
    GradedBasis basis({"e1", "e2"}, {"x", "y"});
    const std::size_t n = 4;
    std::vector<Scalar> g(n * n * n, Scalar());
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
        return g[(i * n + j) * n + k];
    };
    const std::size_t E1 = 0, E2 = 1, X = 2, Y = 3;
    const Scalar half(Rational(1, 2));
    at(E1, E1, E1) = Scalar(1);
    at(E2, E2, E2) = Scalar(1);
    for (std::size_t e : {E1, E2}) {
        at(e, X, X) = half;
        at(X, e, X) = half;
        at(e, Y, Y) = half;
        at(Y, e, Y) = half;
    }
    at(X, Y, E1) = Scalar(1);
    at(X, Y, E2) = t;
    at(Y, X, E1) = Scalar(-1);
    at(Y, X, E2) = -t;
    return SuperAlgebra(std::move(basis), std::move(g));
}

SuperAlgebra builtin_m11plus() {
    GradedBasis basis({"E11", "E22"}, {"E12", "E21"});
    const std::size_t n = 4;
    std::vector<Scalar> g(n * n * n, Scalar());
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
        return g[(i * n + j) * n + k];
    };
    const std::size_t A = 0, B = 1, C = 2, D = 3;  // E11, E22, E12, E21
    const Scalar half(Rational(1, 2));
    at(A, A, A) = Scalar(1);
    at(B, B, B) = Scalar(1);
    for (std::size_t e : {A, B}) {
        at(e, C, C) = half;
        at(C, e, C) = half;
        at(e, D, D) = half;
        at(D, e, D) = half;
    }
    at(C, D, A) = half;
    at(C, D, B) = -half;
    at(D, C, A) = -half;
    at(D, C, B) = half;
    return SuperAlgebra(std::move(basis), std::move(g));
}

bool check_isomorphism(const SuperAlgebra& A, const SuperAlgebra& B, const ExactMatrix& phi) {
    const std::size_t n = A.dim();
    if (B.dim() != n || A.basis().even_dim() != B.basis().even_dim())
        throw DimensionMismatch("algebras have different graded dimensions");
    if (phi.row_count() != n || phi.cols != n)
        throw DimensionMismatch("phi must be a square coordinate matrix");

    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t i = 0; i < n; ++i)
            if (B.parity(q) != A.parity(i) && !phi.at(q, i).is_zero()) return false;
    if (rank(phi) != n) return false;

    auto image = [&](const Element& u) {
        Element out(n, Scalar());
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t i = 0; i < n; ++i)
                if (!phi.at(q, i).is_zero() && !u[i].is_zero()) out[q] += phi.at(q, i) * u[i];
        return out;
    };

    for (std::size_t i = 0; i < n; ++i) {
        Element phi_i(n, Scalar()), phi_j(n, Scalar());
        for (std::size_t q = 0; q < n; ++q) phi_i[q] = phi.at(q, i);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t q = 0; q < n; ++q) phi_j[q] = phi.at(q, j);
            Element lhs = image(A.basis_product(i, j));
            Element rhs = B.product(phi_i, phi_j);
            for (std::size_t q = 0; q < n; ++q)
                if (lhs[q] != rhs[q]) return false;
        }
    }
    return true;
}

}  // namespace jscoh
