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

#include "jscoh/cohomology.hpp"

namespace jscoh {

CochainLayout enumerate_unknowns(const SuperAlgebra& A, const SuperBimodule& M, Parity k) {
    CochainLayout layout;
    layout.parity = k;
    layout.algebra_dim = A.dim();
    layout.module_dim = M.dim();
    layout.lookup.assign(A.dim() * A.dim() * M.dim(), -1);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t q = 0; q < M.dim(); ++q)
                if (M.parity(q) == (A.parity(i) + A.parity(j) + k) % 2) {
                    layout.lookup[(i * A.dim() + j) * M.dim() + q] =
                        static_cast<int>(layout.columns.size());
                    layout.columns.push_back({static_cast<int>(i), static_cast<int>(j),
                                              static_cast<int>(q)});
                }
    return layout;
}

namespace {

/// Linear form over the layout columns; pure linear, no constant part.
using LinForm = ScalarVec;

/// Element of the split-null extension carrying formal h-contributions:
/// algebra part is plain, module part is one linear form per coordinate.
struct FormalElement {
    Element alg;
    std::vector<LinForm> mod;
};

struct FormalContext {
    const SuperAlgebra& A;
    const SuperBimodule& M;
    const CochainLayout& layout;

    FormalElement embed(std::size_t i) const {
        FormalElement e;
        e.alg.assign(A.dim(), Scalar());
        e.alg[i] = Scalar(1);
        e.mod.assign(M.dim(), LinForm(layout.size(), Scalar()));
        return e;
    }

    // u * v = (uv) + h(u_alg, v_alg) + u_alg . v_mod + u_mod . v_alg; the
    // module-module product vanishes, which is what keeps everything linear.
    FormalElement star(const FormalElement& u, const FormalElement& v) const {
        FormalElement w;
        w.alg = A.product(u.alg, v.alg);
        w.mod.assign(M.dim(), LinForm(layout.size(), Scalar()));
        const std::size_t n = A.dim(), m = M.dim(), cols = layout.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (u.alg[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v.alg[j].is_zero()) continue;
                Scalar c = u.alg[i] * v.alg[j];
                for (std::size_t q = 0; q < m; ++q) {
                    int col = layout.col_of(i, j, q);
                    if (col >= 0) w.mod[q][static_cast<std::size_t>(col)] += c;
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (u.alg[i].is_zero()) continue;
            for (std::size_t p = 0; p < m; ++p) {
                for (std::size_t q = 0; q < m; ++q) {
                    const Scalar& l = M.lambda(i, p, q);
                    if (l.is_zero()) continue;
                    Scalar c = u.alg[i] * l;
                    for (std::size_t col = 0; col < cols; ++col)
                        if (!v.mod[p][col].is_zero()) w.mod[q][col] += c * v.mod[p][col];
                }
            }
        }
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t j = 0; j < n; ++j) {
                if (v.alg[j].is_zero()) continue;
                const int sign = (M.parity(p) * A.parity(j)) % 2 ? -1 : 1;
                for (std::size_t q = 0; q < m; ++q) {
                    const Scalar& l = M.lambda(j, p, q);
                    if (l.is_zero()) continue;
                    Scalar c = v.alg[j] * l;
                    if (sign < 0) c = -c;
                    for (std::size_t col = 0; col < cols; ++col)
                        if (!u.mod[p][col].is_zero()) w.mod[q][col] += c * u.mod[p][col];
                }
            }
        }
        return w;
    }
};

void accumulate(std::vector<LinForm>& acc, const std::vector<LinForm>& x, int sign) {
    for (std::size_t q = 0; q < acc.size(); ++q)
        for (std::size_t c = 0; c < acc[q].size(); ++c) {
            if (x[q][c].is_zero()) continue;
            if (sign > 0) acc[q][c] += x[q][c];
            else acc[q][c] -= x[q][c];
        }
}

void generate_supersymmetry(const SuperAlgebra& A, const SuperBimodule& M,
                            const CochainLayout& layout, ExactMatrix& out,
                            std::vector<RowTag>* tags) {
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = i; j < A.dim(); ++j)
            for (std::size_t q = 0; q < M.dim(); ++q) {
                int cij = layout.col_of(i, j, q);
                if (cij < 0) continue;
                int cji = layout.col_of(j, i, q);
                ScalarVec row(layout.size(), Scalar());
                const int sign = (A.parity(i) * A.parity(j)) % 2 ? -1 : 1;
                row[static_cast<std::size_t>(cij)] += Scalar(1);
                row[static_cast<std::size_t>(cji)] -= Scalar(sign);
                out.append_row(std::move(row));
                if (tags)
                    tags->push_back({RowTag::Kind::Supersymmetry,
                                     {static_cast<int>(i), static_cast<int>(j), -1, -1},
                                     static_cast<int>(q)});
            }
}

void generate_jordan(const SuperAlgebra& A, const SuperBimodule& M, const CochainLayout& layout,
                     ExactMatrix& out, std::vector<RowTag>* tags) {
    FormalContext ctx{A, M, layout};
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const int pa = A.parity(i), pb = A.parity(j), pc = A.parity(k),
                              pd = A.parity(l);
                    const int s2 = (pd * (pc + pb) + pb * pc) % 2 ? -1 : 1;
                    const int s3 = (pa * (pb + pc + pd) + pc * pd) % 2 ? -1 : 1;
                    const int r2 = (pd * (pc + pb)) % 2 ? -1 : 1;
                    const int r3 = (pc * pb) % 2 ? -1 : 1;
                    FormalElement a = ctx.embed(i), b = ctx.embed(j), c = ctx.embed(k),
                                  d = ctx.embed(l);
                    FormalElement ab = ctx.star(a, b), ad = ctx.star(a, d), bd = ctx.star(b, d);
                    std::vector<LinForm> res(M.dim(), LinForm(layout.size(), Scalar()));
                    accumulate(res, ctx.star(ctx.star(ab, c), d).mod, 1);
                    accumulate(res, ctx.star(ctx.star(ad, c), b).mod, s2);
                    accumulate(res, ctx.star(ctx.star(bd, c), a).mod, s3);
                    accumulate(res, ctx.star(ab, ctx.star(c, d)).mod, -1);
                    accumulate(res, ctx.star(ad, ctx.star(b, c)).mod, -r2);
                    accumulate(res, ctx.star(ctx.star(a, c), bd).mod, -r3);
                    for (std::size_t q = 0; q < M.dim(); ++q) {
                        bool nonzero = false;
                        for (const auto& e : res[q]) nonzero = nonzero || !e.is_zero();
                        if (!nonzero) continue;
                        out.append_row(std::move(res[q]));
                        if (tags)
                            tags->push_back({RowTag::Kind::Jordan,
                                             {static_cast<int>(i), static_cast<int>(j),
                                              static_cast<int>(k), static_cast<int>(l)},
                                             static_cast<int>(q)});
                    }
                }
}

}  // namespace

ExactMatrix supersymmetry_rows(const SuperAlgebra& A, const SuperBimodule& M,
                               const CochainLayout& layout) {
    ExactMatrix rows(layout.size());
    generate_supersymmetry(A, M, layout, rows, nullptr);
    return rows;
}

ExactMatrix jordan_cocycle_rows(const SuperAlgebra& A, const SuperBimodule& M,
                                const CochainLayout& layout) {
    ExactMatrix rows(layout.size());
    generate_jordan(A, M, layout, rows, nullptr);
    return rows;
}

CocycleSystem build_cocycle_system(const SuperAlgebra& A, const SuperBimodule& M, Parity k) {
    CocycleSystem sys;
    sys.layout = enumerate_unknowns(A, M, k);
    sys.constraints = ExactMatrix(sys.layout.size());
    generate_supersymmetry(A, M, sys.layout, sys.constraints, &sys.provenance);
    generate_jordan(A, M, sys.layout, sys.constraints, &sys.provenance);
    return sys;
}

std::vector<Cocycle> cocycle_space(const SuperAlgebra& A, const SuperBimodule& M, Parity k) {
    CocycleSystem sys = build_cocycle_system(A, M, k);
    std::vector<Cocycle> out;
    for (auto& v : nullspace(sys.constraints)) out.push_back({k, std::move(v)});
    return out;
}

ExactMatrix coboundary_matrix(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                              CoboundaryVariant variant) {
    CochainLayout layout = enumerate_unknowns(A, M, k);
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t m = 0; m < A.dim(); ++m)
        for (std::size_t r = 0; r < M.dim(); ++r)
            if (M.parity(r) == (A.parity(m) + k) % 2) unknowns.emplace_back(m, r);

    ExactMatrix D(unknowns.size());
    D.col_labels.reserve(unknowns.size());
    for (const auto& [m, r] : unknowns)
        D.col_labels.push_back("mu(" + A.basis().name(m) + ")->" + M.basis().name(r));

    for (const auto& col : layout.columns) {
        const std::size_t i = static_cast<std::size_t>(col.i),
                          j = static_cast<std::size_t>(col.j),
                          q = static_cast<std::size_t>(col.q);
        ScalarVec row(unknowns.size(), Scalar());
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto& [m, r] = unknowns[u];
            Scalar val;
            if (q == r) val -= A.gamma(i, j, m);  // -mu(b_i b_j)
            if (j == m) {                         // + b_i . mu(b_j)
                const bool flip = variant == CoboundaryVariant::SignedOdd &&
                                  (k * A.parity(i)) % 2 == 1;
                const Scalar& l = M.lambda(i, r, q);
                if (flip) val -= l;
                else val += l;
            }
            if (i == m) {                         // + mu(b_i) . b_j
                const int sign = (M.parity(r) * A.parity(j)) % 2 ? -1 : 1;
                const Scalar& l = M.lambda(j, r, q);
                if (sign < 0) val -= l;
                else val += l;
            }
            row[u] = std::move(val);
        }
        D.append_row(std::move(row));
    }
    return D;
}

std::vector<Cocycle> coboundary_space(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                                      CoboundaryVariant variant) {
    CocycleSystem sys = build_cocycle_system(A, M, k);
    ExactMatrix D = coboundary_matrix(A, M, k, variant);
    // Kernel of (constraints o delta) picks out the mu whose coboundary is
    // itself a cocycle; their images span B.
    const std::size_t nunk = D.cols;
    ExactMatrix CD(nunk);
    for (const auto& crow : sys.constraints.rows) {
        ScalarVec row(nunk, Scalar());
        bool nonzero = false;
        for (std::size_t u = 0; u < nunk; ++u) {
            for (std::size_t c = 0; c < sys.layout.size(); ++c) {
                if (crow[c].is_zero() || D.rows[c][u].is_zero()) continue;
                row[u] += crow[c] * D.rows[c][u];
            }
            nonzero = nonzero || !row[u].is_zero();
        }
        if (nonzero) CD.append_row(std::move(row));
    }
    std::vector<ScalarVec> kernel = nullspace(CD);

    EchelonAccumulator acc(sys.layout.size());
    std::vector<Cocycle> out;
    for (const auto& kv : kernel) {
        ScalarVec img(sys.layout.size(), Scalar());
        for (std::size_t c = 0; c < sys.layout.size(); ++c)
            for (std::size_t u = 0; u < nunk; ++u)
                if (!D.rows[c][u].is_zero() && !kv[u].is_zero()) img[c] += D.rows[c][u] * kv[u];
        if (acc.insert(img)) out.push_back({k, std::move(img)});
    }
    return out;
}

CohomologyReport cohomology_group(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                                  CoboundaryVariant variant) {
    CohomologyReport rep;
    rep.parity = k;
    rep.Z_basis = cocycle_space(A, M, k);
    rep.B_basis = coboundary_space(A, M, k, variant);
    rep.dim_Z = rep.Z_basis.size();
    rep.dim_B = rep.B_basis.size();
    std::vector<ScalarVec> Z, B;
    for (const auto& z : rep.Z_basis) Z.push_back(z.coeffs);
    for (const auto& b : rep.B_basis) B.push_back(b.coeffs);
    for (auto& r : quotient_basis(Z, B)) rep.H_representatives.push_back({k, std::move(r)});
    rep.dim_H = rep.H_representatives.size();
    if (rep.dim_H != rep.dim_Z - rep.dim_B)
        throw Error("internal: quotient dimension mismatch");
    return rep;
}

ExtensionAlgebra extension_by_cocycle(const SuperAlgebra& A, const SuperBimodule& M,
                                      const Cocycle& h) {
    CochainLayout layout = enumerate_unknowns(A, M, h.parity);
    if (h.coeffs.size() != layout.size())
        throw DimensionMismatch("cocycle coefficient vector does not match layout");
    ExtensionAlgebra ext = split_null_extension(A, M);
    for (std::size_t c = 0; c < layout.size(); ++c) {
        if (h.coeffs[c].is_zero()) continue;
        const auto& col = layout.columns[c];
        ext.algebra.gamma_mut(ext.algebra_index[static_cast<std::size_t>(col.i)],
                              ext.algebra_index[static_cast<std::size_t>(col.j)],
                              ext.module_index[static_cast<std::size_t>(col.q)]) += h.coeffs[c];
    }
    return ext;
}

bool verify_representative_span(const SuperAlgebra& A, const SuperBimodule& M, Parity k,
                                const std::vector<Cocycle>& expected) {
    CochainLayout layout = enumerate_unknowns(A, M, k);
    for (const auto& e : expected)
        if (e.parity != k || e.coeffs.size() != layout.size())
            throw LayoutMismatch("expected cocycle does not match the layout");
    std::vector<Cocycle> Z = cocycle_space(A, M, k);
    EchelonAccumulator zspan(layout.size());
    for (const auto& z : Z) zspan.insert(z.coeffs);
    for (const auto& e : expected)
        if (!zspan.contains(e.coeffs)) return false;
    std::vector<Cocycle> B = coboundary_space(A, M, k);
    EchelonAccumulator span(layout.size());
    for (const auto& e : expected) span.insert(e.coeffs);
    for (const auto& b : B) span.insert(b.coeffs);
    return span.rank() == zspan.rank();
}

namespace {

/// Concrete-h evaluation helpers for paper_identity_check.
struct ConcreteH {
    const SuperAlgebra& A;
    const SuperBimodule& M;
    const CochainLayout& layout;
    const ScalarVec& h;

    std::vector<Scalar> value(const Element& u, const Element& v) const {
        std::vector<Scalar> out(M.dim(), Scalar());
        for (std::size_t i = 0; i < A.dim(); ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < A.dim(); ++j) {
                if (v[j].is_zero()) continue;
                Scalar c = u[i] * v[j];
                for (std::size_t q = 0; q < M.dim(); ++q) {
                    int col = layout.col_of(i, j, q);
                    if (col >= 0 && !h[static_cast<std::size_t>(col)].is_zero())
                        out[q] += c * h[static_cast<std::size_t>(col)];
                }
            }
        }
        return out;
    }

    std::vector<Scalar> act_left(const Element& u, const std::vector<Scalar>& m) const {
        std::vector<Scalar> out(M.dim(), Scalar());
        for (std::size_t i = 0; i < A.dim(); ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t p = 0; p < M.dim(); ++p) {
                if (m[p].is_zero()) continue;
                for (std::size_t q = 0; q < M.dim(); ++q) {
                    const Scalar& l = M.lambda(i, p, q);
                    if (!l.is_zero()) out[q] += u[i] * m[p] * l;
                }
            }
        }
        return out;
    }

    std::vector<Scalar> act_right(const std::vector<Scalar>& m, const Element& u) const {
        std::vector<Scalar> out(M.dim(), Scalar());
        for (std::size_t p = 0; p < M.dim(); ++p) {
            if (m[p].is_zero()) continue;
            for (std::size_t j = 0; j < A.dim(); ++j) {
                if (u[j].is_zero()) continue;
                const int sign = (M.parity(p) * A.parity(j)) % 2 ? -1 : 1;
                for (std::size_t q = 0; q < M.dim(); ++q) {
                    const Scalar& l = M.lambda(j, p, q);
                    if (l.is_zero()) continue;
                    Scalar c = m[p] * u[j] * l;
                    if (sign < 0) out[q] -= c;
                    else out[q] += c;
                }
            }
        }
        return out;
    }

    std::vector<Scalar> F(const Element& a, const Element& b, const Element& c,
                          const Element& d) const {
        Element ab = A.product(a, b);
        Element abc = A.product(ab, c);
        std::vector<Scalar> out = value(abc, d);
        add(out, act_right(value(ab, c), d));
        add(out, act_right(act_right(value(a, b), c), d));
        return out;
    }

    std::vector<Scalar> G(const Element& a, const Element& b, const Element& c,
                          const Element& d) const {
        Element ab = A.product(a, b);
        Element cd = A.product(c, d);
        std::vector<Scalar> out = value(ab, cd);
        add(out, act_right(value(a, b), cd));
        add(out, act_left(ab, value(c, d)));
        return out;
    }

    static void add(std::vector<Scalar>& acc, const std::vector<Scalar>& x, int sign = 1) {
        for (std::size_t q = 0; q < acc.size(); ++q) {
            if (x[q].is_zero()) continue;
            if (sign > 0) acc[q] += x[q];
            else acc[q] -= x[q];
        }
    }
};

}  // namespace

IdentityReport paper_identity_check(const SuperAlgebra& A, const SuperBimodule& M,
                                    const Cocycle& h, IdentitySignVariant variant) {
    CochainLayout layout = enumerate_unknowns(A, M, h.parity);
    if (h.coeffs.size() != layout.size())
        throw LayoutMismatch("cocycle coefficient vector does not match layout");
    ConcreteH ch{A, M, layout, h.coeffs};
    IdentityReport rep;
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const int pa = A.parity(i), pb = A.parity(j), pc = A.parity(k),
                              pd = A.parity(l);
                    Element a(n, Scalar()), b(n, Scalar()), c(n, Scalar()), d(n, Scalar());
                    a[i] = Scalar(1);
                    b[j] = Scalar(1);
                    c[k] = Scalar(1);
                    d[l] = Scalar(1);
                    const int s2 = (pb * (pc + pd) + pc * pd) % 2 ? -1 : 1;
                    const int s3 = (pa * (pb + pc + pd) + pc * pd) % 2 ? -1 : 1;
                    const int g2 = (pb * pc) % 2 ? -1 : 1;
                    const int last = variant == IdentitySignVariant::Printed ? pd * (pc + pd)
                                                                             : pd * (pc + pb);
                    const int g3 = last % 2 ? -1 : 1;
                    std::vector<Scalar> res = ch.F(a, b, c, d);
                    ConcreteH::add(res, ch.F(a, d, c, b), s2);
                    ConcreteH::add(res, ch.F(b, d, c, a), s3);
                    ConcreteH::add(res, ch.G(a, b, c, d), -1);
                    ConcreteH::add(res, ch.G(a, c, b, d), -g2);
                    ConcreteH::add(res, ch.G(a, d, b, c), -g3);
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

}  // namespace jscoh
