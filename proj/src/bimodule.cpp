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

#include "jscoh/bimodule.hpp"

namespace jscoh {

SuperBimodule::SuperBimodule(GradedBasis basis, std::vector<Parity> algebra_parities,
                             std::vector<Scalar> left_action)
    : basis_(std::move(basis)),
      algebra_parities_(std::move(algebra_parities)),
      action_(std::move(left_action)) {
    if (action_.size() != algebra_dim() * dim() * dim())
        throw DimensionMismatch("action tensor size does not match dimensions");
}

std::vector<Scalar> SuperBimodule::act_left(std::size_t i, const std::vector<Scalar>& m) const {
    const std::size_t d = dim();
    if (m.size() != d) throw DimensionMismatch("module element length mismatch");
    std::vector<Scalar> out(d, Scalar());
    for (std::size_t p = 0; p < d; ++p) {
        if (m[p].is_zero()) continue;
        for (std::size_t q = 0; q < d; ++q) {
            const Scalar& l = lambda(i, p, q);
            if (!l.is_zero()) out[q] += m[p] * l;
        }
    }
    return out;
}

std::vector<Scalar> SuperBimodule::act_right(const std::vector<Scalar>& m, std::size_t j) const {
    const std::size_t d = dim();
    if (m.size() != d) throw DimensionMismatch("module element length mismatch");
    std::vector<Scalar> out(d, Scalar());
    for (std::size_t p = 0; p < d; ++p) {
        if (m[p].is_zero()) continue;
        const int sign = (parity(p) * algebra_parities_[j]) % 2 ? -1 : 1;
        for (std::size_t q = 0; q < d; ++q) {
            const Scalar& l = lambda(j, p, q);
            if (l.is_zero()) continue;
            if (sign > 0) out[q] += m[p] * l;
            else out[q] -= m[p] * l;
        }
    }
    return out;
}

SuperBimodule regular_bimodule(const SuperAlgebra& A) {
    const std::size_t n = A.dim();
    std::vector<std::string> even, odd;
    for (std::size_t i = 0; i < n; ++i) {
        std::string name = "~" + A.basis().name(i);
        if (A.parity(i) == 0) even.push_back(std::move(name));
        else odd.push_back(std::move(name));
    }
    std::vector<Parity> apar(n);
    for (std::size_t i = 0; i < n; ++i) apar[i] = A.parity(i);
    return SuperBimodule(GradedBasis(std::move(even), std::move(odd)), std::move(apar), A.table());
}

SuperBimodule shifted_regular_bimodule(const SuperAlgebra& A) {
    const std::size_t n = A.dim();
    // flipped parities: former odd elements become even and come first
    std::vector<std::string> even, odd;
    std::vector<std::size_t> order;  // module position -> algebra index
    for (std::size_t i = 0; i < n; ++i)
        if (A.parity(i) == 1) { even.push_back("~" + A.basis().name(i)); order.push_back(i); }
    for (std::size_t i = 0; i < n; ++i)
        if (A.parity(i) == 0) { odd.push_back("~" + A.basis().name(i)); order.push_back(i); }
    std::vector<Scalar> action(n * n * n, Scalar());
    for (std::size_t i = 0; i < n; ++i) {
        const int twist = A.parity(i) == 1 ? -1 : 1;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& g = A.gamma(i, order[p], order[q]);
                if (g.is_zero()) continue;
                action[(i * n + p) * n + q] = twist < 0 ? -g : g;
            }
    }
    std::vector<Parity> apar(n);
    for (std::size_t i = 0; i < n; ++i) apar[i] = A.parity(i);
    return SuperBimodule(GradedBasis(std::move(even), std::move(odd)), std::move(apar),
                         std::move(action));
}

ExtensionAlgebra split_null_extension(const SuperAlgebra& A, const SuperBimodule& M) {
    if (M.algebra_dim() != A.dim())
        throw DimensionMismatch("module action tensor does not match algebra dimension");
    const std::size_t na = A.dim(), nm = M.dim(), n = na + nm;

    std::vector<std::string> even, odd;
    std::vector<std::size_t> aix(na), mix(nm);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < na; ++i)
        if (A.parity(i) == 0) { even.push_back(A.basis().name(i)); aix[i] = pos++; }
    for (std::size_t p = 0; p < nm; ++p)
        if (M.parity(p) == 0) { even.push_back(M.basis().name(p)); mix[p] = pos++; }
    for (std::size_t i = 0; i < na; ++i)
        if (A.parity(i) == 1) { odd.push_back(A.basis().name(i)); aix[i] = pos++; }
    for (std::size_t p = 0; p < nm; ++p)
        if (M.parity(p) == 1) { odd.push_back(M.basis().name(p)); mix[p] = pos++; }

    std::vector<Scalar> table(n * n * n, Scalar());
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
        return table[(i * n + j) * n + k];
    };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) {
                const Scalar& g = A.gamma(i, j, k);
                if (!g.is_zero()) at(aix[i], aix[j], aix[k]) = g;
            }
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t p = 0; p < nm; ++p)
            for (std::size_t q = 0; q < nm; ++q) {
                const Scalar& l = M.lambda(i, p, q);
                if (l.is_zero()) continue;
                at(aix[i], mix[p], mix[q]) = l;
                const int sign = (M.parity(p) * A.parity(i)) % 2 ? -1 : 1;
                at(mix[p], aix[i], mix[q]) = sign < 0 ? -l : l;
            }

    ExtensionAlgebra ext;
    ext.algebra = SuperAlgebra(GradedBasis(std::move(even), std::move(odd)), std::move(table));
    ext.algebra_index = std::move(aix);
    ext.module_index = std::move(mix);
    return ext;
}

IdentityReport check_bimodule(const SuperAlgebra& A, const SuperBimodule& M) {
    ExtensionAlgebra ext = split_null_extension(A, M);
    IdentityReport sc = ext.algebra.check_supercommutative();
    IdentityReport jd = ext.algebra.check_jordan();
    IdentityReport out;
    out.passed = sc.passed && jd.passed;
    out.violations = std::move(sc.violations);
    out.violations.insert(out.violations.end(), jd.violations.begin(), jd.violations.end());
    return out;
}

}  // namespace jscoh
