#include "coalglab/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coalglab/error.hpp"

namespace coalglab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

Vec Algebra::basis_vector(std::size_t i) const {
    Vec v = vec_zero(field, dim);
    v[i] = Scalar::one(field);
    return v;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim) throw dimension_mismatch("Algebra::multiply");
    Vec r = vec_zero(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& m = mult.at(i, j, k);
                if (!m.is_zero()) r[k] += c * m;
            }
        }
    }
    return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
    Matrix l(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& m = mult.at(i, j, k);
                if (!m.is_zero()) l.at(k, j) += a[i] * m;
            }
    }
    return l;
}

Matrix Algebra::right_mult(const Vec& a) const {
    Matrix r(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& m = mult.at(i, j, k);
                if (!m.is_zero()) r.at(k, i) += a[j] * m;
            }
    }
    return r;
}

Vec Algebra::power(const Vec& a, std::size_t n) const {
    Vec acc = unit;
    for (std::size_t i = 0; i < n; ++i) acc = multiply(acc, a);
    return acc;
}

Diagnostics verify_algebra(const Algebra& a) {
    Diagnostics d;
    if (a.unit.size() != a.dim || a.mult.d0 != a.dim || a.mult.d1 != a.dim || a.mult.d2 != a.dim) {
        d.fail("shape: mult tensor or unit size does not match dim");
        return d;
    }
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec e = a.basis_vector(i);
        if (a.multiply(a.unit, e) != e) d.fail("unit law fails on left of e_" + std::to_string(i));
        if (a.multiply(e, a.unit) != e) d.fail("unit law fails on right of e_" + std::to_string(i));
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
            for (std::size_t l = 0; l < a.dim; ++l) {
                Vec left = a.multiply(ij, a.basis_vector(l));
                Vec right = a.multiply(a.basis_vector(i), a.multiply(a.basis_vector(j), a.basis_vector(l)));
                if (left != right)
                    d.fail("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(l) + ")");
            }
        }
    return d;
}

std::optional<Vec> element_inverse(const Algebra& a, const Vec& x) {
    auto sol = solve_linear(a.left_mult(x), a.unit);
    if (!sol.consistent) return std::nullopt;
    // one-sided inverses are two-sided in finite dimension; checked anyway
    if (a.multiply(sol.particular, x) != a.unit) return std::nullopt;
    return sol.particular;
}

Diagnostics verify_algebra_morphism(const Algebra& a, const Algebra& b, const Matrix& theta) {
    Diagnostics d;
    if (theta.cols() != a.dim || theta.rows() != b.dim) {
        d.fail("shape: map is not dim(B) x dim(A)");
        return d;
    }
    if (theta.apply(a.unit) != b.unit) d.fail("unit is not preserved");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec lhs = theta.apply(a.multiply(a.basis_vector(i), a.basis_vector(j)));
            Vec rhs = b.multiply(theta.apply(a.basis_vector(i)), theta.apply(a.basis_vector(j)));
            if (lhs != rhs)
                d.fail("multiplicativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return d;
}

Diagnostics verify_automorphism(const Algebra& alg, const Matrix& theta) {
    Diagnostics d = verify_algebra_morphism(alg, alg, theta);
    if (theta.rows() == theta.cols() && !invertible(theta)) d.fail("map is not invertible");
    return d;
}

namespace {

Matrix trace_form(const Algebra& a) {
    std::vector<Matrix> lm;
    lm.reserve(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) lm.push_back(a.left_mult(a.basis_vector(i)));
    Matrix g(a.field, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i; j < a.dim; ++j) {
            Scalar t = Scalar::zero(a.field);
            for (std::size_t x = 0; x < a.dim; ++x)
                for (std::size_t y = 0; y < a.dim; ++y) {
                    const Scalar& u = lm[i].at(x, y);
                    if (!u.is_zero()) t += u * lm[j].at(y, x);
                }
            g.at(i, j) = t;
            g.at(j, i) = t;
        }
    return g;
}

bool is_nilpotent_ideal(const Algebra& a, const Subspace& s) {
    Subspace cur = s;
    for (std::size_t guard = 0; guard <= a.dim + 1; ++guard) {
        if (cur.dim() == 0) return true;
        Subspace next = ideal_product(a, cur, s);
        if (next.dim() >= cur.dim()) return false;
        cur = next;
    }
    return false;
}

} // namespace

Subspace jacobson_radical(const Algebra& a) {
    const Field& f = a.field;
    if (!f.is_rational() && f.characteristic() <= a.dim)
        throw small_characteristic("jacobson_radical: characteristic " +
                                   std::to_string(f.characteristic()) + " <= dim " +
                                   std::to_string(a.dim) + "; use radical_subspace");
    // Dickson: kernel of the trace form of the regular representation,
    // iterated on the quotient until it vanishes there.
    Subspace k = kernel_subspace(trace_form(a));
    for (std::size_t guard = 0; guard <= a.dim; ++guard) {
        if (k.dim() == 0) break;
        if (!is_two_sided_ideal(a, k))
            throw method_disagreement("jacobson_radical: trace kernel is not an ideal");
        QuotientAlgebra q = quotient_algebra(a, k);
        Subspace k2 = kernel_subspace(trace_form(q.algebra));
        if (k2.dim() == 0) break;
        k = preimage(q.chart.projection, k2);
    }
    if (!is_nilpotent_ideal(a, k))
        throw method_disagreement("jacobson_radical: computed ideal is not nilpotent");
    return k;
}

Subspace radical_by_enumeration(const Algebra& a, std::size_t budget) {
    auto ideals = enumerate_left_ideal_subspaces(a, budget);
    std::vector<Subspace> maximal;
    for (const auto& i : ideals) {
        if (i.dim() == a.dim) continue;
        bool is_max = true;
        for (const auto& j : ideals) {
            if (j.dim() == a.dim || j.dim() <= i.dim()) continue;
            if (j.contains(i)) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(i);
    }
    Subspace rad = Subspace::full(a.field, a.dim);
    for (const auto& m : maximal) rad = subspace_intersect(rad, m);
    return rad;
}

Subspace radical_subspace(const Algebra& a, std::size_t budget) {
    if (a.field.is_rational() || a.field.characteristic() > a.dim) return jacobson_radical(a);
    return radical_by_enumeration(a, budget);
}

Subspace center(const Algebra& a) {
    Matrix stack(a.field, 0, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec e = a.basis_vector(i);
        stack = stack.stacked(a.right_mult(e) - a.left_mult(e));
    }
    return kernel_subspace(stack);
}

Subspace ideal_product(const Algebra& a, const Subspace& u, const Subspace& v) {
    std::vector<Vec> products;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j)
            products.push_back(a.multiply(u.basis_vector(i), v.basis_vector(j)));
    return Subspace::span(a.dim, products, a.field);
}

bool is_left_ideal(const Algebra& a, const Subspace& s) {
    for (std::size_t i = 0; i < a.dim; ++i) {
        Matrix l = a.left_mult(a.basis_vector(i));
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.contains(l.apply(s.basis_vector(j)))) return false;
    }
    return true;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
    if (!is_left_ideal(a, s)) return false;
    for (std::size_t i = 0; i < a.dim; ++i) {
        Matrix r = a.right_mult(a.basis_vector(i));
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.contains(r.apply(s.basis_vector(j)))) return false;
    }
    return true;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
    QuotientAlgebra q;
    q.chart = quotient_chart(ideal);
    std::size_t m = a.dim - ideal.dim();
    q.algebra.field = a.field;
    q.algebra.dim = m;
    q.algebra.mult = Tensor3(a.field, m, m, m);
    q.algebra.unit = q.chart.projection.apply(a.unit);
    for (std::size_t i = 0; i < m; ++i) {
        Vec ei = q.chart.section.col(i);
        for (std::size_t j = 0; j < m; ++j) {
            Vec prod = q.chart.projection.apply(a.multiply(ei, q.chart.section.col(j)));
            for (std::size_t k = 0; k < m; ++k) q.algebra.mult.at(i, j, k) = prod[k];
        }
    }
    return q;
}

Algebra subalgebra_on(const Algebra& a, const Subspace& s) {
    Algebra sub;
    sub.field = a.field;
    sub.dim = s.dim();
    sub.mult = Tensor3(a.field, sub.dim, sub.dim, sub.dim);
    if (!s.contains(a.unit)) throw invalid_structure("subalgebra_on: unit is not in the subspace");
    sub.unit = s.coordinates_of(a.unit);
    for (std::size_t i = 0; i < sub.dim; ++i)
        for (std::size_t j = 0; j < sub.dim; ++j) {
            Vec prod = a.multiply(s.basis_vector(i), s.basis_vector(j));
            if (!s.contains(prod))
                throw invalid_structure("subalgebra_on: subspace is not closed under multiplication");
            Vec c = s.coordinates_of(prod);
            for (std::size_t k = 0; k < sub.dim; ++k) sub.mult.at(i, j, k) = c[k];
        }
    return sub;
}

Algebra algebra_from_matrix_span(const std::vector<Matrix>& basis) {
    if (basis.empty()) throw invalid_structure("algebra_from_matrix_span: empty basis");
    const Field f = basis.front().field();
    const std::size_t m = basis.front().rows();
    auto flatten = [&](const Matrix& t) {
        Vec v;
        v.reserve(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) v.push_back(t.at(i, j));
        return v;
    };
    std::vector<Vec> rows;
    for (const auto& b : basis) {
        if (b.rows() != m || b.cols() != m)
            throw dimension_mismatch("algebra_from_matrix_span: mixed shapes");
        rows.push_back(flatten(b));
    }
    Subspace span = Subspace::span(m * m, rows, f);
    if (span.dim() != basis.size())
        throw invalid_structure("algebra_from_matrix_span: basis is linearly dependent");

    Algebra alg;
    alg.field = f;
    alg.dim = basis.size();
    alg.mult = Tensor3(f, alg.dim, alg.dim, alg.dim);
    Vec id_flat = flatten(Matrix::identity(f, m));
    if (!span.contains(id_flat))
        throw invalid_structure("algebra_from_matrix_span: identity is not in the span");
    // express everything in the given basis, not the RREF basis
    Matrix basis_mat = Matrix::from_rows(f, rows).transpose(); // (m*m) x dim
    auto coords = [&](const Vec& v) {
        auto sol = solve_linear(basis_mat, v);
        if (!sol.consistent)
            throw invalid_structure("algebra_from_matrix_span: span is not closed under product");
        return sol.particular;
    };
    alg.unit = coords(id_flat);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec prod = coords(flatten(basis[i] * basis[j]));
            for (std::size_t k = 0; k < alg.dim; ++k) alg.mult.at(i, j, k) = prod[k];
        }
    return alg;
}

// ---------------------------------------------------------------------------
// division certification
// ---------------------------------------------------------------------------

namespace {

bool power_within_budget(std::uint32_t p, std::size_t n, std::size_t budget, std::size_t& out) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (acc > budget / p) return false;
        acc *= p;
    }
    out = acc;
    return acc <= budget;
}

// enumerate all vectors of GF(p)^n via an odometer
template <typename F>
void for_each_vector(const Field& f, std::size_t n, F&& fn) {
    const std::uint32_t p = f.characteristic();
    std::vector<std::uint32_t> digits(n, 0);
    Vec v = vec_zero(f, n);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < n) {
            if (++digits[i] < p) {
                v[i] = Scalar::of_int(f, digits[i]);
                break;
            }
            digits[i] = 0;
            v[i] = Scalar::zero(f);
            ++i;
        }
        if (i == n) break;
    }
}

std::vector<Vec> probe_elements(const Algebra& a) {
    std::vector<Vec> probes;
    for (std::size_t i = 0; i < a.dim; ++i) probes.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j) {
            probes.push_back(vec_add(a.basis_vector(i), a.basis_vector(j)));
            probes.push_back(vec_sub(a.basis_vector(i), a.basis_vector(j)));
        }
    return probes;
}

Matrix algebra_element_matrix(const Algebra& a, const Vec& z) { return a.left_mult(z); }

// z is primitive iff its powers span the whole algebra
bool is_primitive(const Algebra& a, const Vec& z) {
    std::vector<Vec> pow;
    Vec cur = a.unit;
    for (std::size_t i = 0; i < a.dim; ++i) {
        pow.push_back(cur);
        cur = a.multiply(cur, z);
    }
    return Subspace::span(a.dim, pow, a.field).dim() == a.dim;
}

std::optional<Vec> find_primitive_element(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        if (is_primitive(a, a.basis_vector(i))) return a.basis_vector(i);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j) {
            Vec v = vec_add(a.basis_vector(i), a.basis_vector(j));
            if (is_primitive(a, v)) return v;
            v = vec_sub(a.basis_vector(i), a.basis_vector(j));
            if (is_primitive(a, v)) return v;
        }
    std::uint64_t state = 0x2545f4914f6cdd1dull;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec v = vec_zero(a.field, a.dim);
        for (std::size_t i = 0; i < a.dim; ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            long c = static_cast<long>((state >> 33) % 7) - 3;
            v[i] = Scalar::of_int(a.field, c);
        }
        if (!vec_is_zero(v) && is_primitive(a, v)) return v;
    }
    return std::nullopt;
}

// decisive scan over all of GF(p)^n: every nonzero element invertible?
Verdict exhaustive_division_scan(const Algebra& a, std::size_t budget) {
    std::size_t total = 0;
    if (a.field.is_rational() || !power_within_budget(a.field.characteristic(), a.dim, budget, total))
        return Verdict::unknown;
    Verdict verdict = Verdict::yes;
    for_each_vector(a.field, a.dim, [&](const Vec& v) {
        if (verdict == Verdict::no || vec_is_zero(v)) return;
        if (!element_inverse(a, v)) verdict = Verdict::no;
    });
    return verdict;
}

} // namespace

Verdict commutative_algebra_is_field(const Algebra& a, std::size_t budget, int degree_cap) {
    if (a.dim == 0) return Verdict::no;
    if (a.dim == 1) return Verdict::yes;

    if (auto z = find_primitive_element(a)) {
        Polynomial mu = minimal_polynomial(algebra_element_matrix(a, *z));
        try {
            auto fac = factor_univariate(mu, degree_cap);
            bool irreducible = fac.factors.size() == 1 && fac.factors.front().second == 1;
            return irreducible ? Verdict::yes : Verdict::no;
        } catch (const degree_cap_exceeded&) {
            return Verdict::unknown;
        }
    }

    // no primitive element found: decisive over GF(p) within budget
    Verdict scan = exhaustive_division_scan(a, budget);
    if (scan != Verdict::unknown) return scan;

    // last resort: a basis element whose minimal polynomial splits or is
    // squarefull disproves fieldness
    for (const Vec& v : probe_elements(a)) {
        if (vec_is_zero(v)) continue;
        Polynomial mu = minimal_polynomial(algebra_element_matrix(a, v));
        try {
            auto fac = factor_univariate(mu, degree_cap);
            if (fac.factors.size() > 1 || (fac.factors.size() == 1 && fac.factors.front().second > 1))
                return Verdict::no;
        } catch (const degree_cap_exceeded&) {
        }
    }
    return Verdict::unknown;
}

DivisionCertificate certify_division_algebra(const Algebra& a, std::size_t budget, int degree_cap,
                                             bool lazy) {
    DivisionCertificate cert;
    if (a.dim == 0) {
        cert.verdict = Verdict::no;
        cert.detail = "zero algebra";
        return cert;
    }
    Subspace rad = radical_subspace(a, budget);
    if (rad.dim() > 0) {
        cert.verdict = Verdict::no;
        cert.detail = "nonzero Jacobson radical (dim " + std::to_string(rad.dim()) + ")";
        return cert;
    }
    for (const Vec& v : probe_elements(a)) {
        if (vec_is_zero(v)) continue;
        if (!element_inverse(a, v)) {
            cert.verdict = Verdict::no;
            cert.detail = "probed element has no inverse";
            return cert;
        }
    }
    Subspace z = center(a);
    Algebra zalg = subalgebra_on(a, z);
    Verdict center_field = commutative_algebra_is_field(zalg, budget, degree_cap);
    if (center_field == Verdict::no) {
        cert.verdict = Verdict::no;
        cert.detail = "center is not a field";
        return cert;
    }
    if (center_field == Verdict::unknown && !lazy) {
        cert.verdict = Verdict::unknown;
        cert.detail = "center field test hit the factorization cap";
        return cert;
    }
    // element minimal polynomials must stay irreducible in a division algebra
    bool cap_hit = false;
    for (const Vec& v : probe_elements(a)) {
        if (vec_is_zero(v)) continue;
        Polynomial mu = minimal_polynomial(algebra_element_matrix(a, v));
        try {
            auto fac = factor_univariate(mu, degree_cap);
            if (fac.factors.size() > 1 || (fac.factors.size() == 1 && fac.factors.front().second > 1)) {
                cert.verdict = Verdict::no;
                cert.detail = "probed element has reducible minimal polynomial";
                return cert;
            }
        } catch (const degree_cap_exceeded&) {
            cap_hit = true; // lazily treated as "no splitting found"
        }
    }
    Verdict scan = exhaustive_division_scan(a, budget);
    if (scan != Verdict::unknown) {
        cert.verdict = scan;
        cert.detail = "decided by exhaustive GF(p) scan";
        return cert;
    }
    if (z.dim() == a.dim && center_field == Verdict::yes) {
        cert.verdict = Verdict::yes;
        cert.detail = "commutative with irreducible primitive minimal polynomial";
        return cert;
    }
    if (!lazy) {
        cert.verdict = Verdict::unknown;
        cert.detail = cap_hit ? "factorization cap blocked a decisive answer"
                              : "noncommutative over an infinite field: no decisive route";
        return cert;
    }
    cert.verdict = Verdict::yes;
    cert.detail = "lazy certificate: radical zero, probes invertible, no idempotent found";
    return cert;
}

// ---------------------------------------------------------------------------
// chain rings
// ---------------------------------------------------------------------------

ChainRingCertificate is_left_chain_ring(const Algebra& a, std::size_t budget, int degree_cap) {
    ChainRingCertificate cert;
    Subspace j = radical_subspace(a, budget);

    cert.radical_powers.push_back(Subspace::full(a.field, a.dim));
    Subspace cur = j;
    while (cur.dim() > 0) {
        cert.radical_powers.push_back(cur);
        Subspace next = ideal_product(a, cur, j);
        if (next.dim() >= cur.dim())
            throw method_disagreement("is_left_chain_ring: radical powers do not descend");
        cur = next;
    }
    cert.radical_powers.push_back(Subspace::zero(a.field, a.dim));

    QuotientAlgebra q = quotient_algebra(a, j);
    DivisionCertificate div = certify_division_algebra(q.algebra, budget, degree_cap);
    if (div.verdict != Verdict::yes) {
        cert.is_chain = false;
        cert.notes.push_back("A/J is not certified as a division algebra: " + div.detail);
        return cert;
    }

    if (j.dim() == 0) {
        cert.is_chain = true;
        cert.generator = vec_zero(a.field, a.dim);
        cert.notes.push_back("semisimple case: A itself is a division algebra");
        return cert;
    }

    Subspace j2 = ideal_product(a, j, j);
    std::size_t layer = j.dim() - j2.dim();
    if (layer != q.algebra.dim) {
        cert.is_chain = false;
        cert.notes.push_back("dim_k(J/J^2) = " + std::to_string(layer) + " != dim_k(A/J) = " +
                             std::to_string(q.algebra.dim) + ", so dim_{A/J}(J/J^2) > 1 or J is not principal");
        return cert;
    }

    std::optional<Vec> t;
    for (std::size_t i = 0; i < j.dim(); ++i)
        if (!j2.contains(j.basis_vector(i))) {
            t = j.basis_vector(i);
            break;
        }
    if (!t) throw method_disagreement("is_left_chain_ring: J = J^2 with J nonzero");

    // every power J^i must equal A t^i
    Vec tp = a.unit;
    for (std::size_t i = 0; i + 1 < cert.radical_powers.size(); ++i) {
        if (image(a.right_mult(tp)) != cert.radical_powers[i]) {
            cert.is_chain = false;
            cert.notes.push_back("A t^" + std::to_string(i) + " != J^" + std::to_string(i));
            return cert;
        }
        tp = a.multiply(tp, *t);
    }
    if (!vec_is_zero(tp)) {
        cert.is_chain = false;
        cert.notes.push_back("t^nilpotency is nonzero");
        return cert;
    }

    cert.is_chain = true;
    cert.generator = *t;
    return cert;
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

namespace {

void require_automorphism(const Algebra& d, const Matrix& theta, const char* who) {
    Diagnostics diag = verify_automorphism(d, theta);
    if (!diag.valid)
        throw invalid_structure(std::string(who) + ": invalid automorphism: " + diag.violations.front());
}

} // namespace

Algebra skew_polynomial_quotient(const Algebra& d, const AlgebraAutomorphism& alpha, std::size_t n) {
    require_automorphism(d, alpha.matrix, "skew_polynomial_quotient");
    const std::size_t r = d.dim;
    const std::size_t dim = r * (n + 1);

    std::vector<Matrix> alpha_pow;
    alpha_pow.push_back(Matrix::identity(d.field, r));
    for (std::size_t i = 1; i <= n; ++i) alpha_pow.push_back(alpha_pow.back() * alpha.matrix);

    Algebra a;
    a.field = d.field;
    a.dim = dim;
    a.mult = Tensor3(d.field, dim, dim, dim);
    a.unit = vec_zero(d.field, dim);
    for (std::size_t s = 0; s < r; ++s) a.unit[s] = d.unit[s];

    // (e_s x^i)(e_t x^j) = e_s alpha^i(e_t) x^(i+j), truncated above degree n
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j + i <= n; ++j)
            for (std::size_t s = 0; s < r; ++s)
                for (std::size_t t = 0; t < r; ++t) {
                    Vec at = alpha_pow[i].col(t);
                    Vec prod = d.multiply(d.basis_vector(s), at);
                    for (std::size_t v = 0; v < r; ++v) {
                        if (prod[v].is_zero()) continue;
                        a.mult.at(i * r + s, j * r + t, (i + j) * r + v) = prod[v];
                    }
                }

    Grading g(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t s = 0; s < r; ++s) g[i].push_back(i * r + s);
    a.grading = g;
    return a;
}

Algebra trivial_extension(const Algebra& d, const AlgebraAutomorphism& phi, const AlgebraAutomorphism& sigma) {
    require_automorphism(d, phi.matrix, "trivial_extension(phi)");
    require_automorphism(d, sigma.matrix, "trivial_extension(sigma)");
    const std::size_t r = d.dim;
    Algebra a;
    a.field = d.field;
    a.dim = 2 * r;
    a.mult = Tensor3(d.field, 2 * r, 2 * r, 2 * r);
    a.unit = vec_zero(d.field, 2 * r);
    for (std::size_t s = 0; s < r; ++s) a.unit[s] = d.unit[s];

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Vec dd = d.multiply(d.basis_vector(i), d.basis_vector(j));
            for (std::size_t k = 0; k < r; ++k) {
                if (!dd[k].is_zero()) a.mult.at(i, j, k) = dd[k]; // (e_i,0)(e_j,0)
            }
            Vec phi_i = phi.matrix.col(i);
            Vec pj = d.multiply(phi_i, d.basis_vector(j)); // (e_i,0)(0,e_j) = (0, phi(e_i) e_j)
            for (std::size_t k = 0; k < r; ++k)
                if (!pj[k].is_zero()) a.mult.at(i, r + j, r + k) = pj[k];
            Vec sig_j = sigma.matrix.col(j);
            Vec is = d.multiply(d.basis_vector(i), sig_j); // (0,e_i)(e_j,0) = (0, e_i sigma(e_j))
            for (std::size_t k = 0; k < r; ++k)
                if (!is[k].is_zero()) a.mult.at(r + i, j, r + k) = is[k];
            // (0,e_i)(0,e_j) = 0
        }

    Grading g(2);
    for (std::size_t s = 0; s < r; ++s) g[0].push_back(s);
    for (std::size_t s = 0; s < r; ++s) g[1].push_back(r + s);
    a.grading = g;
    return a;
}

Algebra direct_product_algebra(const std::vector<Algebra>& parts) {
    if (parts.empty()) throw invalid_structure("direct_product_algebra: no parts");
    const Field f = parts.front().field;
    std::size_t dim = 0;
    for (const auto& p : parts) {
        if (!(p.field == f)) throw field_mismatch("direct_product_algebra: mixed fields");
        dim += p.dim;
    }
    Algebra a;
    a.field = f;
    a.dim = dim;
    a.mult = Tensor3(f, dim, dim, dim);
    a.unit = vec_zero(f, dim);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.dim; ++i) {
            a.unit[off + i] = p.unit[i];
            for (std::size_t j = 0; j < p.dim; ++j)
                for (std::size_t k = 0; k < p.dim; ++k)
                    a.mult.at(off + i, off + j, off + k) = p.mult.at(i, j, k);
        }
        off += p.dim;
    }
    return a;
}

Bimodule bimodule_from_automorphism(const Algebra& d, const AlgebraAutomorphism& alpha) {
    require_automorphism(d, alpha.matrix, "bimodule_from_automorphism");
    Bimodule m;
    m.base = d;
    m.dim = d.dim;
    m.left = d.mult; // a |> x = a x
    m.right = Tensor3(d.field, d.dim, d.dim, d.dim);
    for (std::size_t a = 0; a < d.dim; ++a)
        for (std::size_t i = 0; i < d.dim; ++i) {
            Vec prod = d.multiply(d.basis_vector(a), alpha.matrix.col(i)); // x <| b = x alpha(b)
            for (std::size_t b = 0; b < d.dim; ++b) m.right.at(a, i, b) = prod[b];
        }
    return m;
}

namespace {

Vec bimodule_left_act(const Bimodule& m, const Vec& a, const Vec& x) {
    Vec r = vec_zero(m.base.field, m.dim);
    for (std::size_t i = 0; i < m.base.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t s = 0; s < m.dim; ++s) {
            if (x[s].is_zero()) continue;
            Scalar c = a[i] * x[s];
            for (std::size_t b = 0; b < m.dim; ++b)
                if (!m.left.at(i, s, b).is_zero()) r[b] += c * m.left.at(i, s, b);
        }
    }
    return r;
}

Vec bimodule_right_act(const Bimodule& m, const Vec& x, const Vec& a) {
    Vec r = vec_zero(m.base.field, m.dim);
    for (std::size_t s = 0; s < m.dim; ++s) {
        if (x[s].is_zero()) continue;
        for (std::size_t i = 0; i < m.base.dim; ++i) {
            if (a[i].is_zero()) continue;
            Scalar c = x[s] * a[i];
            for (std::size_t b = 0; b < m.dim; ++b)
                if (!m.right.at(s, i, b).is_zero()) r[b] += c * m.right.at(s, i, b);
        }
    }
    return r;
}

} // namespace

Diagnostics verify_bimodule(const Bimodule& m) {
    Diagnostics diag;
    const Algebra& d = m.base;
    for (std::size_t s = 0; s < m.dim; ++s) {
        Vec x = vec_zero(d.field, m.dim);
        x[s] = Scalar::one(d.field);
        if (bimodule_left_act(m, d.unit, x) != x) diag.fail("left action is not unital at m_" + std::to_string(s));
        if (bimodule_right_act(m, x, d.unit) != x) diag.fail("right action is not unital at m_" + std::to_string(s));
        for (std::size_t i = 0; i < d.dim; ++i)
            for (std::size_t j = 0; j < d.dim; ++j) {
                Vec ij = d.multiply(d.basis_vector(i), d.basis_vector(j));
                if (bimodule_left_act(m, ij, x) !=
                    bimodule_left_act(m, d.basis_vector(i), bimodule_left_act(m, d.basis_vector(j), x)))
                    diag.fail("left action not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(s) + ")");
                if (bimodule_right_act(m, x, ij) !=
                    bimodule_right_act(m, bimodule_right_act(m, x, d.basis_vector(i)), d.basis_vector(j)))
                    diag.fail("right action not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(s) + ")");
                if (bimodule_right_act(m, bimodule_left_act(m, d.basis_vector(i), x), d.basis_vector(j)) !=
                    bimodule_left_act(m, d.basis_vector(i), bimodule_right_act(m, x, d.basis_vector(j))))
                    diag.fail("actions do not commute at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(s) + ")");
            }
    }
    return diag;
}

// ---------------------------------------------------------------------------
// brute-force enumeration over GF(p)
// ---------------------------------------------------------------------------

std::vector<Subspace> enumerate_invariant_subspaces(const std::vector<Matrix>& generators,
                                                    std::size_t n, const Field& f,
                                                    std::size_t budget) {
    if (f.is_rational())
        throw invalid_structure("enumerate_invariant_subspaces: field must be GF(p)");
    std::size_t total = 0;
    if (!power_within_budget(f.characteristic(), n, budget, total))
        throw budget_exceeded("enumeration budget exceeded: p^" + std::to_string(n) + " > " +
                              std::to_string(budget));

    auto close_up = [&](Subspace s) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < s.dim() && !changed; ++i)
                for (const auto& g : generators) {
                    Vec u = g.apply(s.basis_vector(i));
                    if (!s.contains(u)) {
                        s = subspace_sum(s, Subspace::span(n, {u}, f));
                        changed = true;
                        break;
                    }
                }
        }
        return s;
    };

    std::set<std::string> seen;
    std::vector<Subspace> out;
    auto record = [&](const Subspace& s) {
        if (seen.insert(s.key()).second) out.push_back(s);
    };
    record(Subspace::zero(f, n));

    for_each_vector(f, n, [&](const Vec& v) {
        if (vec_is_zero(v)) return;
        record(close_up(Subspace::span(n, {v}, f)));
    });

    // close the cyclic family under sums
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i + 1; j < sz; ++j) {
                Subspace s = subspace_sum(out[i], out[j]);
                if (seen.insert(s.key()).second) {
                    out.push_back(s);
                    changed = true;
                }
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_left_ideal_subspaces(const Algebra& a, std::size_t budget) {
    std::vector<Matrix> gens;
    gens.reserve(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) gens.push_back(a.left_mult(a.basis_vector(i)));
    return enumerate_invariant_subspaces(gens, a.dim, a.field, budget);
}

} // namespace coalglab
