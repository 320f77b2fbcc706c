#include "coalglab/constructors.hpp"

#include <algorithm>

#include "coalglab/error.hpp"

namespace coalglab {

// ---------------------------------------------------------------------------
// coefficient algebras
// ---------------------------------------------------------------------------

Algebra ground_field_algebra(const Field& f) {
    Algebra a;
    a.field = f;
    a.dim = 1;
    a.mult = Tensor3(f, 1, 1, 1);
    a.mult.at(0, 0, 0) = Scalar::one(f);
    a.unit = {Scalar::one(f)};
    a.grading = Grading{{0}};
    return a;
}

Algebra gaussian_algebra(const Field& f) {
    Algebra a;
    a.field = f;
    a.dim = 2;
    a.mult = Tensor3(f, 2, 2, 2);
    Scalar one = Scalar::one(f);
    a.mult.at(0, 0, 0) = one;
    a.mult.at(0, 1, 1) = one;
    a.mult.at(1, 0, 1) = one;
    a.mult.at(1, 1, 0) = -one;
    a.unit = {one, Scalar::zero(f)};
    a.grading = Grading{{0, 1}};
    return a;
}

Algebra quaternion_algebra(const Field& f) {
    Algebra a;
    a.field = f;
    a.dim = 4;
    a.mult = Tensor3(f, 4, 4, 4);
    Scalar one = Scalar::one(f);
    // basis 1, i, j, k
    auto set = [&](std::size_t x, std::size_t y, std::size_t z, bool neg) {
        a.mult.at(x, y, z) = neg ? -one : one;
    };
    set(0, 0, 0, false); set(0, 1, 1, false); set(0, 2, 2, false); set(0, 3, 3, false);
    set(1, 0, 1, false); set(2, 0, 2, false); set(3, 0, 3, false);
    set(1, 1, 0, true);  set(2, 2, 0, true);  set(3, 3, 0, true);
    set(1, 2, 3, false); set(2, 1, 3, true);
    set(2, 3, 1, false); set(3, 2, 1, true);
    set(3, 1, 2, false); set(1, 3, 2, true);
    a.unit = {one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    a.grading = Grading{{0, 1, 2, 3}};
    return a;
}

Algebra truncated_polynomial_algebra(const Field& f, std::size_t n) {
    Algebra a;
    a.field = f;
    a.dim = n + 1;
    a.mult = Tensor3(f, n + 1, n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) a.mult.at(i, j, i + j) = Scalar::one(f);
    a.unit = vec_zero(f, n + 1);
    a.unit[0] = Scalar::one(f);
    Grading g(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g[i] = {i};
    a.grading = g;
    return a;
}

AlgebraAutomorphism identity_automorphism(const Algebra& d) {
    return {Matrix::identity(d.field, d.dim)};
}

AlgebraAutomorphism conjugation_automorphism(const Algebra& d) {
    if (d.dim != 2) throw invalid_structure("conjugation_automorphism: expects a 2-dimensional algebra");
    Matrix m = Matrix::identity(d.field, 2);
    m.at(1, 1) = -Scalar::one(d.field);
    Diagnostics diag = verify_automorphism(d, m);
    if (!diag.valid)
        throw invalid_structure("conjugation_automorphism: conjugation is not an automorphism here");
    return {m};
}

QuiverPresentation loop_quiver() {
    QuiverPresentation q;
    q.vertex_count = 1;
    q.arrows = {{0, 0}};
    return q;
}

QuiverPresentation a2_quiver() {
    QuiverPresentation q;
    q.vertex_count = 2;
    q.arrows = {{0, 1}};
    return q;
}

// ---------------------------------------------------------------------------
// named constructions
// ---------------------------------------------------------------------------

Coalgebra divided_power(const Field& f, std::size_t n) {
    Coalgebra c;
    c.field = f;
    c.dim = n + 1;
    c.comult = Tensor3(f, n + 1, n + 1, n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t i = 0; i <= k; ++i) c.comult.at(k, i, k - i) = Scalar::one(f);
    c.counit = vec_zero(f, n + 1);
    c.counit[0] = Scalar::one(f);
    Grading g(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g[i] = {i};
    c.grading = g;
    return c;
}

CoproductResult coproduct(const std::vector<Coalgebra>& parts) {
    if (parts.empty()) throw invalid_structure("coproduct: no parts");
    const Field f = parts.front().field;
    std::size_t dim = 0;
    bool all_graded = true;
    std::size_t max_degree = 0;
    for (const auto& p : parts) {
        if (!(p.field == f)) throw field_mismatch("coproduct: mixed fields");
        dim += p.dim;
        if (!p.grading) all_graded = false;
        else max_degree = std::max(max_degree, p.grading->size());
    }
    CoproductResult res;
    res.coalgebra.field = f;
    res.coalgebra.dim = dim;
    res.coalgebra.comult = Tensor3(f, dim, dim, dim);
    res.coalgebra.counit = vec_zero(f, dim);
    Grading g(max_degree);
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix emb(f, dim, p.dim);
        for (std::size_t k = 0; k < p.dim; ++k) {
            emb.at(off + k, k) = Scalar::one(f);
            res.coalgebra.counit[off + k] = p.counit[k];
            for (std::size_t i = 0; i < p.dim; ++i)
                for (std::size_t j = 0; j < p.dim; ++j)
                    res.coalgebra.comult.at(off + k, off + i, off + j) = p.comult.at(k, i, j);
        }
        if (all_graded)
            for (std::size_t d = 0; d < p.grading->size(); ++d)
                for (std::size_t idx : (*p.grading)[d]) g[d].push_back(off + idx);
        res.embeddings.push_back(std::move(emb));
        off += p.dim;
    }
    if (all_graded) res.coalgebra.grading = g;
    return res;
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& e) {
    if (!(c.field == e.field)) throw field_mismatch("tensor_coalgebra: mixed fields");
    const Field& f = c.field;
    const std::size_t nc = c.dim, ne = e.dim;
    const std::size_t dim = nc * ne;
    Coalgebra t;
    t.field = f;
    t.dim = dim;
    t.comult = Tensor3(f, dim, dim, dim);
    t.counit = vec_zero(f, dim);
    auto idx = [&](std::size_t a, std::size_t b) { return a * ne + b; };
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b < ne; ++b) {
            t.counit[idx(a, b)] = c.counit[a] * e.counit[b];
            for (std::size_t i = 0; i < nc; ++i)
                for (std::size_t j = 0; j < nc; ++j) {
                    const Scalar& vc = c.comult.at(a, i, j);
                    if (vc.is_zero()) continue;
                    for (std::size_t s = 0; s < ne; ++s)
                        for (std::size_t u = 0; u < ne; ++u) {
                            const Scalar& ve = e.comult.at(b, s, u);
                            if (!ve.is_zero())
                                t.comult.at(idx(a, b), idx(i, s), idx(j, u)) += vc * ve;
                        }
                }
        }
    if (c.grading && e.grading) {
        Grading g(c.grading->size() + e.grading->size() - 1);
        for (std::size_t dc = 0; dc < c.grading->size(); ++dc)
            for (std::size_t de = 0; de < e.grading->size(); ++de)
                for (std::size_t a : (*c.grading)[dc])
                    for (std::size_t b : (*e.grading)[de]) g[dc + de].push_back(idx(a, b));
        for (auto& blk : g) std::sort(blk.begin(), blk.end());
        t.grading = g;
    }
    return t;
}

Coalgebra graded_series_coalgebra(const Algebra& d, const AlgebraAutomorphism& alpha, std::size_t n,
                                  std::size_t budget) {
    Diagnostics adiag = verify_automorphism(d, alpha.matrix);
    if (!adiag.valid)
        throw invalid_structure("graded_series_coalgebra: invalid automorphism: " + adiag.violations.front());
    DivisionCertificate div = certify_division_algebra(d, budget);
    if (div.verdict == Verdict::no)
        throw invalid_structure("graded_series_coalgebra: coefficient algebra is not a division algebra: " +
                                div.detail);

    const Field& f = d.field;
    const std::size_t r = d.dim;
    const std::size_t dim = r * (n + 1);
    std::vector<Matrix> alpha_pow;
    alpha_pow.push_back(Matrix::identity(f, r));
    for (std::size_t i = 1; i <= n; ++i) alpha_pow.push_back(alpha_pow.back() * alpha.matrix);

    Coalgebra c;
    c.field = f;
    c.dim = dim;
    c.comult = Tensor3(f, dim, dim, dim);
    c.counit = vec_zero(f, dim);
    // Delta(e_{kn}) = sum_{i+j=n} sum_{s,t} e_k^*(e_s alpha^i(e_t)) e_{si} (x) e_{tj}
    for (std::size_t deg = 0; deg <= n; ++deg)
        for (std::size_t i = 0; i <= deg; ++i) {
            std::size_t j = deg - i;
            for (std::size_t s = 0; s < r; ++s)
                for (std::size_t t = 0; t < r; ++t) {
                    Vec prod = d.multiply(d.basis_vector(s), alpha_pow[i].col(t));
                    for (std::size_t k = 0; k < r; ++k)
                        if (!prod[k].is_zero())
                            c.comult.at(deg * r + k, i * r + s, j * r + t) = prod[k];
                }
        }
    for (std::size_t k = 0; k < r; ++k) c.counit[k] = d.unit[k]; // eps(e_{k0}) = e_k^*(1)
    Grading g(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t k = 0; k < r; ++k) g[i].push_back(i * r + k);
    c.grading = g;
    return c;
}

BicomoduleData dual_bicomodule(const Bimodule& m) {
    const Field& f = m.base.field;
    BicomoduleData b;
    b.coalgebra = dual_coalgebra(m.base);
    b.dim = m.dim;
    b.left = Tensor3(f, m.dim, m.base.dim, m.dim);
    b.right = Tensor3(f, m.dim, m.dim, m.base.dim);
    // <rho_l(m_a^*), e_i (x) m_b> = <m_a^*, e_i |> m_b>
    for (std::size_t a = 0; a < m.dim; ++a)
        for (std::size_t i = 0; i < m.base.dim; ++i)
            for (std::size_t b2 = 0; b2 < m.dim; ++b2) {
                b.left.at(a, i, b2) = m.left.at(i, b2, a);
                b.right.at(a, b2, i) = m.right.at(b2, i, a);
            }
    return b;
}

// ---------------------------------------------------------------------------
// truncated cotensor coalgebra
// ---------------------------------------------------------------------------

namespace {

// rho_l as matrix M -> C (x) M and rho_r as matrix M -> M (x) C
Matrix left_coaction_matrix(const BicomoduleData& b) {
    const Field& f = b.coalgebra.field;
    Matrix rl(f, b.coalgebra.dim * b.dim, b.dim);
    for (std::size_t a = 0; a < b.dim; ++a)
        for (std::size_t k = 0; k < b.coalgebra.dim; ++k)
            for (std::size_t b2 = 0; b2 < b.dim; ++b2)
                if (!b.left.at(a, k, b2).is_zero()) rl.at(k * b.dim + b2, a) = b.left.at(a, k, b2);
    return rl;
}

Matrix right_coaction_matrix(const BicomoduleData& b) {
    const Field& f = b.coalgebra.field;
    Matrix rr(f, b.dim * b.coalgebra.dim, b.dim);
    for (std::size_t a = 0; a < b.dim; ++a)
        for (std::size_t b2 = 0; b2 < b.dim; ++b2)
            for (std::size_t k = 0; k < b.coalgebra.dim; ++k)
                if (!b.right.at(a, b2, k).is_zero()) rr.at(b2 * b.coalgebra.dim + k, a) = b.right.at(a, b2, k);
    return rr;
}

std::size_t int_pow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

} // namespace

Coalgebra cotensor_truncated(const Coalgebra& c0, const BicomoduleData& m, std::size_t n,
                             std::size_t budget) {
    if (m.coalgebra.comult != c0.comult || !(m.coalgebra.field == c0.field))
        throw invalid_structure("cotensor_truncated: bicomodule is not over C0");
    Diagnostics bdiag = verify_bicomodule(m);
    if (!bdiag.valid)
        throw invalid_structure("cotensor_truncated: invalid bicomodule: " + bdiag.violations.front());
    {
        Algebra a0 = convolution_dual(c0);
        if (radical_subspace(a0, budget).dim() != 0)
            throw invalid_structure("cotensor_truncated: C0 is not cosemisimple");
    }

    const Field& f = c0.field;
    const std::size_t n0 = c0.dim;
    const std::size_t md = m.dim;
    Matrix rl = left_coaction_matrix(m);  // (n0*md) x md
    Matrix rr = right_coaction_matrix(m); // (md*n0) x md

    // cotensor defect map M (x) M -> M (x) C (x) M
    Matrix defect = kronecker(rr, Matrix::identity(f, md)) - kronecker(Matrix::identity(f, md), rl);

    // block bases: blocks[k] has rows spanning M^{box k} inside M^(x k)
    std::vector<Matrix> blocks;
    blocks.push_back(Matrix::identity(f, n0)); // degree 0: C0 itself
    if (n >= 1) blocks.push_back(Matrix::identity(f, md));
    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t amb = int_pow(md, k);
        Matrix stack(f, 0, amb);
        for (std::size_t pos = 1; pos < k; ++pos) {
            Matrix cond = kronecker(Matrix::identity(f, int_pow(md, pos - 1)),
                                    kronecker(defect, Matrix::identity(f, int_pow(md, k - 1 - pos))));
            stack = stack.stacked(cond);
        }
        Matrix basis = kernel(stack);
        blocks.push_back(basis);
    }

    std::vector<std::size_t> offs(n + 2, 0);
    offs[0] = 0;
    for (std::size_t k = 0; k <= n; ++k) offs[k + 1] = offs[k] + blocks[k].rows();
    const std::size_t dim = offs[n + 1];

    Coalgebra t;
    t.field = f;
    t.dim = dim;
    t.comult = Tensor3(f, dim, dim, dim);
    t.counit = vec_zero(f, dim);

    // degree 0: Delta and counit of C0
    for (std::size_t k = 0; k < n0; ++k) {
        t.counit[k] = c0.counit[k];
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n0; ++j) t.comult.at(k, i, j) = c0.comult.at(k, i, j);
    }

    auto coords_in_block = [&](std::size_t k, const Vec& v) {
        auto sol = solve_linear(blocks[k].transpose(), v);
        if (!sol.consistent)
            throw method_disagreement("cotensor_truncated: component leaves the cotensor subspace");
        return sol.particular;
    };

    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t amb = int_pow(md, k);
        Matrix rl_first = kronecker(rl, Matrix::identity(f, int_pow(md, k - 1))); // -> C0 (x) M^k
        Matrix rr_last = kronecker(Matrix::identity(f, int_pow(md, k - 1)), rr);  // -> M^k (x) C0
        for (std::size_t row = 0; row < blocks[k].rows(); ++row) {
            const std::size_t self = offs[k] + row;
            Vec w = blocks[k].row(row);

            // head: C0 (x) (block k)
            Vec lw = rl_first.apply(w); // index k0*amb + rest
            for (std::size_t k0 = 0; k0 < n0; ++k0) {
                Vec slice(lw.begin() + k0 * amb, lw.begin() + (k0 + 1) * amb);
                if (vec_is_zero(slice)) continue;
                Vec coord = coords_in_block(k, slice);
                for (std::size_t r2 = 0; r2 < blocks[k].rows(); ++r2)
                    if (!coord[r2].is_zero()) t.comult.at(self, k0, offs[k] + r2) += coord[r2];
            }

            // deconcatenations: (block i) (x) (block k-i)
            for (std::size_t i = 1; i < k; ++i) {
                Matrix pair_basis = kronecker(blocks[i], blocks[k - i]).transpose();
                auto sol = solve_linear(pair_basis, w);
                if (!sol.consistent)
                    throw method_disagreement("cotensor_truncated: deconcatenation leaves the blocks");
                const std::size_t rj = blocks[k - i].rows();
                for (std::size_t ri = 0; ri < blocks[i].rows(); ++ri)
                    for (std::size_t rj2 = 0; rj2 < rj; ++rj2) {
                        const Scalar& v = sol.particular[ri * rj + rj2];
                        if (!v.is_zero()) t.comult.at(self, offs[i] + ri, offs[k - i] + rj2) += v;
                    }
            }

            // tail: (block k) (x) C0
            Vec rw = rr_last.apply(w); // index rest*n0 + k0
            for (std::size_t k0 = 0; k0 < n0; ++k0) {
                Vec slice = vec_zero(f, amb);
                for (std::size_t rest = 0; rest < amb; ++rest) slice[rest] = rw[rest * n0 + k0];
                if (vec_is_zero(slice)) continue;
                Vec coord = coords_in_block(k, slice);
                for (std::size_t r2 = 0; r2 < blocks[k].rows(); ++r2)
                    if (!coord[r2].is_zero()) t.comult.at(self, offs[k] + r2, k0) += coord[r2];
            }
        }
    }

    Grading g(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t row = 0; row < blocks[k].rows(); ++row) g[k].push_back(offs[k] + row);
    while (g.size() > 1 && g.back().empty()) g.pop_back();
    t.grading = g;
    return t;
}

// ---------------------------------------------------------------------------
// path coalgebras
// ---------------------------------------------------------------------------

namespace {

struct Path {
    std::size_t source = 0;              // start vertex
    std::vector<std::size_t> arrows;     // arrow indices, composable
    std::size_t target(const QuiverPresentation& q) const {
        return arrows.empty() ? source : q.arrows[arrows.back()].target;
    }
};

std::vector<Path> enumerate_paths(const QuiverPresentation& q, std::size_t max_len) {
    std::vector<Path> all;
    for (std::size_t v = 0; v < q.vertex_count; ++v) all.push_back({v, {}});
    std::vector<Path> frontier = all;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            std::size_t end = p.target(q);
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == end) {
                    Path np = p;
                    np.arrows.push_back(a);
                    next.push_back(np);
                }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return all; // ordered by length, then discovery order (deterministic)
}

} // namespace

Coalgebra truncated_path_coalgebra(const QuiverPresentation& q, std::size_t n, const Field& f) {
    if (!q.attached.empty())
        throw invalid_structure("truncated_path_coalgebra: vertex coalgebras are not allowed here");
    return generalized_path_coalgebra(q, n, f);
}

namespace {

// Series coalgebra of a vertex coalgebra along one loop: basis (k, deg)
// with Delta((k,n)) = sum_{i+j=n} sum_{s,t} d_v[k][s][t] (s,i) (x) (t,j).
// Degree-major index n*dim+k; for an attached dual algebra D* this is
// bit-equal to graded_series_coalgebra(D, id, N).
Coalgebra loop_series_coalgebra(const Coalgebra& v, std::size_t n) {
    const Field& f = v.field;
    const std::size_t r = v.dim;
    Coalgebra c;
    c.field = f;
    c.dim = r * (n + 1);
    c.comult = Tensor3(f, c.dim, c.dim, c.dim);
    c.counit = vec_zero(f, c.dim);
    for (std::size_t deg = 0; deg <= n; ++deg)
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t i = 0; i <= deg; ++i) {
                std::size_t j = deg - i;
                for (std::size_t s = 0; s < r; ++s)
                    for (std::size_t t = 0; t < r; ++t) {
                        const Scalar& d = v.comult.at(k, s, t);
                        if (!d.is_zero()) c.comult.at(deg * r + k, i * r + s, j * r + t) = d;
                    }
            }
    for (std::size_t k = 0; k < r; ++k) c.counit[k] = v.counit[k];
    Grading g(n + 1);
    for (std::size_t deg = 0; deg <= n; ++deg)
        for (std::size_t k = 0; k < r; ++k) g[deg].push_back(deg * r + k);
    c.grading = g;
    return c;
}

} // namespace

Coalgebra generalized_path_coalgebra(const QuiverPresentation& q, std::size_t n, const Field& field_in) {
    if (q.vertex_count == 0) throw invalid_structure("generalized_path_coalgebra: empty quiver");
    // bare quiver: attach the ground field coalgebra everywhere
    QuiverPresentation quiver = q;
    Field f = field_in;
    if (!quiver.attached.empty()) {
        if (quiver.attached.size() != quiver.vertex_count)
            throw invalid_structure("generalized_path_coalgebra: need one coalgebra per vertex");
        f = quiver.attached.front().field;
        for (const auto& c : quiver.attached) {
            if (!(c.field == f)) throw field_mismatch("generalized_path_coalgebra: mixed fields");
            Diagnostics d = verify_coalgebra(c);
            if (!d.valid)
                throw invalid_structure("generalized_path_coalgebra: invalid vertex coalgebra: " +
                                        d.violations.front());
        }
        bool all_trivial = true;
        for (const auto& c : quiver.attached)
            if (c.dim != 1) all_trivial = false;
        if (!all_trivial) {
            // nontrivial vertex coalgebras: the supported shapes are the ones
            // the cotensor identification pins down
            if (quiver.arrows.empty()) return coproduct(quiver.attached).coalgebra;
            if (quiver.vertex_count == 1 && quiver.arrows.size() == 1)
                return loop_series_coalgebra(quiver.attached.front(), n);
            throw invalid_structure(
                "generalized_path_coalgebra: nontrivial vertex coalgebras are supported on "
                "arrowless quivers and on a single loop only");
        }
    } else {
        Coalgebra triv;
        triv.field = f;
        triv.dim = 1;
        triv.comult = Tensor3(f, 1, 1, 1);
        triv.comult.at(0, 0, 0) = Scalar::one(f);
        triv.counit = {Scalar::one(f)};
        quiver.attached.assign(quiver.vertex_count, triv);
    }

    auto paths = enumerate_paths(quiver, n);

    // vertex-coalgebra dimensions along a path: slots 0..len
    auto slot_coalgebra = [&](const Path& p, std::size_t slot) -> const Coalgebra& {
        if (slot == 0) return quiver.attached[p.source];
        return quiver.attached[quiver.arrows[p.arrows[slot - 1]].target];
    };

    // basis: (path index, tuple of vertex-basis indices), tuple row-major
    struct BasisElement {
        std::size_t path;
        std::vector<std::size_t> tuple;
    };
    std::vector<BasisElement> basis;
    std::vector<std::size_t> path_offset(paths.size(), 0);
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
        path_offset[pi] = basis.size();
        const Path& p = paths[pi];
        std::vector<std::size_t> tuple(p.arrows.size() + 1, 0);
        while (true) {
            basis.push_back({pi, tuple});
            std::size_t slot = tuple.size();
            while (slot-- > 0) {
                if (++tuple[slot] < slot_coalgebra(p, slot).dim) break;
                tuple[slot] = 0;
                if (slot == 0) goto done_tuples;
            }
            continue;
        done_tuples:
            break;
        }
    }

    auto index_of = [&](std::size_t pi, const std::vector<std::size_t>& tuple) {
        const Path& p = paths[pi];
        std::size_t idx = 0;
        for (std::size_t slot = 0; slot < tuple.size(); ++slot)
            idx = idx * slot_coalgebra(p, slot).dim + tuple[slot];
        return path_offset[pi] + idx;
    };

    // locate prefix/suffix path indices
    auto find_path = [&](std::size_t source, const std::vector<std::size_t>& arrows) {
        for (std::size_t pi = 0; pi < paths.size(); ++pi)
            if (paths[pi].source == source && paths[pi].arrows == arrows) return pi;
        throw method_disagreement("generalized_path_coalgebra: split path not found");
    };

    const std::size_t dim = basis.size();
    Coalgebra c;
    c.field = f;
    c.dim = dim;
    c.comult = Tensor3(f, dim, dim, dim);
    c.counit = vec_zero(f, dim);

    for (std::size_t bi = 0; bi < dim; ++bi) {
        const BasisElement& be = basis[bi];
        const Path& p = paths[be.path];
        const std::size_t len = p.arrows.size();
        if (len == 0) c.counit[bi] = quiver.attached[p.source].counit[be.tuple[0]];

        for (std::size_t slot = 0; slot <= len; ++slot) {
            const Coalgebra& vc = slot_coalgebra(p, slot);
            // left part: arrows [0, slot), right part: arrows [slot, len)
            std::vector<std::size_t> left_arrows(p.arrows.begin(), p.arrows.begin() + slot);
            std::vector<std::size_t> right_arrows(p.arrows.begin() + slot, p.arrows.end());
            std::size_t left_pi = find_path(p.source, left_arrows);
            std::size_t right_source =
                slot == 0 ? p.source : quiver.arrows[p.arrows[slot - 1]].target;
            std::size_t right_pi = find_path(right_source, right_arrows);
            for (std::size_t u = 0; u < vc.dim; ++u)
                for (std::size_t v = 0; v < vc.dim; ++v) {
                    const Scalar& coef = vc.comult.at(be.tuple[slot], u, v);
                    if (coef.is_zero()) continue;
                    std::vector<std::size_t> lt(be.tuple.begin(), be.tuple.begin() + slot);
                    lt.push_back(u);
                    std::vector<std::size_t> rt;
                    rt.push_back(v);
                    rt.insert(rt.end(), be.tuple.begin() + slot + 1, be.tuple.end());
                    c.comult.at(bi, index_of(left_pi, lt), index_of(right_pi, rt)) += coef;
                }
        }
    }

    Grading g(n + 1);
    for (std::size_t bi = 0; bi < dim; ++bi) g[paths[basis[bi].path].arrows.size()].push_back(bi);
    while (g.size() > 1 && g.back().empty()) g.pop_back();
    c.grading = g;
    return c;
}

// ---------------------------------------------------------------------------
// golden tables
// ---------------------------------------------------------------------------

Coalgebra golden_ex63() {
    const Field f = Field::rationals();
    Coalgebra c;
    c.field = f;
    c.dim = 4;
    c.comult = Tensor3(f, 4, 4, 4);
    Scalar one = Scalar::one(f);
    // basis e, f, g, h = 0, 1, 2, 3
    c.comult.at(0, 0, 0) = one;  // e (x) e
    c.comult.at(0, 1, 1) = -one; // - f (x) f
    c.comult.at(1, 0, 1) = one;  // e (x) f
    c.comult.at(1, 1, 0) = one;  // f (x) e
    c.comult.at(2, 0, 2) = one;  // e (x) g
    c.comult.at(2, 2, 0) = one;  // g (x) e
    c.comult.at(2, 1, 3) = one;  // f (x) h
    c.comult.at(2, 3, 1) = -one; // - h (x) f
    c.comult.at(3, 0, 3) = one;  // e (x) h
    c.comult.at(3, 3, 0) = one;  // h (x) e
    c.comult.at(3, 1, 2) = -one; // - f (x) g
    c.comult.at(3, 2, 1) = one;  // g (x) f
    c.counit = {one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    c.grading = Grading{{0, 1}, {2, 3}};
    return c;
}

namespace {

// shared shape of ex61 and ex64: basis x_0, y_0, x_1, y_1, ...
Coalgebra golden_series(std::size_t n, bool twisted) {
    const Field f = Field::rationals();
    Coalgebra c;
    c.field = f;
    c.dim = 2 * (n + 1);
    c.comult = Tensor3(f, c.dim, c.dim, c.dim);
    c.counit = vec_zero(f, c.dim);
    Scalar one = Scalar::one(f);
    auto xi = [&](std::size_t d) { return 2 * d; };
    auto yi = [&](std::size_t d) { return 2 * d + 1; };
    for (std::size_t deg = 0; deg <= n; ++deg)
        for (std::size_t i = 0; i <= deg; ++i) {
            std::size_t j = deg - i;
            Scalar sign = (twisted && i % 2 == 1) ? -one : one;
            // Delta(x_n) = sum x_i (x) x_j - (-1)^i y_i (x) y_j
            c.comult.at(xi(deg), xi(i), xi(j)) += one;
            c.comult.at(xi(deg), yi(i), yi(j)) -= sign;
            // Delta(y_n) = sum (-1)^i x_i (x) y_j + y_i (x) x_j
            c.comult.at(yi(deg), xi(i), yi(j)) += sign;
            c.comult.at(yi(deg), yi(i), xi(j)) += one;
        }
    c.counit[xi(0)] = one;
    Grading g(n + 1);
    for (std::size_t d = 0; d <= n; ++d) g[d] = {xi(d), yi(d)};
    c.grading = g;
    return c;
}

} // namespace

Coalgebra golden_ex61(std::size_t n) { return golden_series(n, false); }
Coalgebra golden_ex64(std::size_t n) { return golden_series(n, true); }

Comodule direct_sum_comodule(const std::vector<Comodule>& parts) {
    if (parts.empty()) throw invalid_structure("direct_sum_comodule: no parts");
    const Coalgebra& c = parts.front().coalgebra;
    std::size_t dim = 0;
    for (const auto& p : parts) {
        if (p.coalgebra.comult != c.comult || !(p.coalgebra.field == c.field))
            throw invalid_structure("direct_sum_comodule: parts over different coalgebras");
        dim += p.dim;
    }
    Comodule m;
    m.coalgebra = c;
    m.dim = dim;
    m.coaction = Tensor3(c.field, dim, dim, c.dim);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t a = 0; a < p.dim; ++a)
            for (std::size_t b = 0; b < p.dim; ++b)
                for (std::size_t k = 0; k < c.dim; ++k)
                    m.coaction.at(off + a, off + b, k) = p.coaction.at(a, b, k);
        off += p.dim;
    }
    return m;
}

} // namespace coalglab
