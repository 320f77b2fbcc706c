#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalglab/poly.hpp"
#include "coalglab/subspace.hpp"

using namespace coalglab;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::gf(2);
const Field F5 = Field::gf(5);

Scalar q(long n, long d = 1) { return Scalar::of_fraction(Q, n, d); }

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    Scalar scalar(const Field& f) { return Scalar::of_int(f, static_cast<long>(next() % 7) - 3); }
    Matrix matrix(const Field& f, std::size_t r, std::size_t c) {
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar(f);
        return m;
    }
};

} // namespace

TEST_CASE("scalar arithmetic and serialization") {
    CHECK(q(6, 8).to_string() == "3/4");
    CHECK(q(-6, 8).to_string() == "-3/4");
    CHECK(q(6, -8).to_string() == "-3/4");
    CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
    CHECK((q(2, 3) * q(3, 2)).is_one());
    CHECK(q(7).inverse().to_string() == "1/7");
    CHECK(Scalar::parse(Q, "-22/7") == q(-22, 7));

    Scalar a = Scalar::of_int(F5, 3), b = Scalar::of_int(F5, 4);
    CHECK((a * b).to_string() == "2 mod 5");
    CHECK((a + b).residue() == 2);
    CHECK(a.inverse().residue() == 2);
    CHECK(Scalar::parse(F5, "2 mod 5").residue() == 2);
    CHECK_THROWS_AS(Scalar::zero(F5).inverse(), coalg_error);
    CHECK_THROWS_AS((void)(a + q(1)), field_mismatch);
    CHECK_THROWS_AS((void)Field::gf(6), invalid_structure);
}

TEST_CASE("solve_linear examples") {
    // identity 3x3
    Matrix id3 = Matrix::identity(Q, 3);
    Vec b = {q(1), q(2), q(3)};
    auto sol = solve_linear(id3, b);
    REQUIRE(sol.consistent);
    CHECK(sol.particular == b);
    CHECK(sol.kernel_basis.rows() == 0);

    // zero 2x2, b = 0
    Matrix z(Q, 2, 2);
    auto sol0 = solve_linear(z, vec_zero(Q, 2));
    REQUIRE(sol0.consistent);
    CHECK(vec_is_zero(sol0.particular));
    CHECK(sol0.kernel_basis.rows() == 2);

    // over GF(2): A=[[1,1],[1,1]], b=(1,1) -> one solution + kernel span{(1,1)}
    // oracle: enumerate all 4 vectors of GF(2)^2
    Matrix a2 = Matrix::from_int_rows(F2, {{1, 1}, {1, 1}});
    Vec b2 = {Scalar::one(F2), Scalar::one(F2)};
    auto sol2 = solve_linear(a2, b2);
    REQUIRE(sol2.consistent);
    std::vector<Vec> solutions;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            Vec v = {Scalar::of_int(F2, x), Scalar::of_int(F2, y)};
            if (a2.apply(v) == b2) solutions.push_back(v);
        }
    CHECK(solutions.size() == 2); // (1,0) and (0,1)
    CHECK(a2.apply(sol2.particular) == b2);
    CHECK(sol2.kernel_basis.rows() == 1);
    Vec k11 = {Scalar::one(F2), Scalar::one(F2)};
    CHECK(Subspace(2, sol2.kernel_basis).contains(k11));

    // inconsistent system
    Matrix a3 = Matrix::from_int_rows(Q, {{1, 0}, {1, 0}});
    CHECK_FALSE(solve_linear(a3, Vec{q(1), q(2)}).consistent);
}

TEST_CASE("subspace sum and intersection examples") {
    Subspace e1 = Subspace::span(3, {{q(1), q(0), q(0)}}, Q);
    Subspace e2 = Subspace::span(3, {{q(0), q(1), q(0)}}, Q);
    CHECK(subspace_sum(e1, e1) == e1);
    CHECK(subspace_sum(e1, e2).dim() == 2);
    CHECK(subspace_intersect(e1, e1) == e1);
    CHECK(subspace_intersect(e1, e2).dim() == 0);

    // Q^3: span{e1,e2} ^ span{e2,e3} = span{e2}; oracle: direct membership solve
    Subspace u = Subspace::span(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}}, Q);
    Subspace v = Subspace::span(3, {{q(0), q(1), q(0)}, {q(0), q(0), q(1)}}, Q);
    Subspace w = subspace_intersect(u, v);
    CHECK(w == e2);

    // GF(2), dim 2: span{(1,0)} + span{(1,1)} = full
    Subspace g1 = Subspace::span(2, {{Scalar::one(F2), Scalar::zero(F2)}}, F2);
    Subspace g2 = Subspace::span(2, {{Scalar::one(F2), Scalar::one(F2)}}, F2);
    CHECK(subspace_sum(g1, g2) == Subspace::full(F2, 2));
}

TEST_CASE("subspace canonicity under change of basis") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = rng.matrix(Q, 3, 5);
        Subspace s1(5, m);
        // random invertible recombination of the rows spans the same space
        Matrix t = rng.matrix(Q, 3, 3);
        if (!invertible(t)) continue;
        Subspace s2(5, t * m);
        CHECK(s1 == s2);
    }
}

TEST_CASE("dimension formula and modular law on random subspaces") {
    for (auto field : {Q, F5}) {
        Rng rng(field.is_rational() ? 11 : 13);
        for (int trial = 0; trial < 25; ++trial) {
            Subspace u(4, rng.matrix(field, 2, 4));
            Subspace v(4, rng.matrix(field, 2, 4));
            Subspace w(4, rng.matrix(field, 3, 4));
            CHECK(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() == u.dim() + v.dim());
            // modular law with U <= W: U + (V ^ W) = (U + V) ^ W
            Subspace uw = subspace_intersect(u, w); // some subspace of W
            Subspace lhs = subspace_sum(uw, subspace_intersect(v, w));
            Subspace rhs = subspace_intersect(subspace_sum(uw, v), w);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("preimage examples and invariants") {
    // projection Q^3 -> Q^2 dropping z; W = span{e1} -> span{e1, e3}
    Matrix proj = Matrix::from_int_rows(Q, {{1, 0, 0}, {0, 1, 0}});
    Subspace w = Subspace::span(2, {{q(1), q(0)}}, Q);
    Subspace pre = preimage(proj, w);
    CHECK(pre == Subspace::span(3, {{q(1), q(0), q(0)}, {q(0), q(0), q(1)}}, Q));

    CHECK(preimage(proj, Subspace::full(Q, 2)) == Subspace::full(Q, 3));
    CHECK(preimage(proj, Subspace::zero(Q, 2)) == kernel_subspace(proj));

    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix l = rng.matrix(Q, 3, 4);
        CHECK(preimage(l, image(l)) == Subspace::full(Q, 4));
        CHECK(preimage(l, Subspace::zero(Q, 3)) == kernel_subspace(l));
    }
}

TEST_CASE("kronecker product") {
    CHECK(kronecker(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));

    Matrix two(Q, 1, 1);
    two.at(0, 0) = q(2);
    Matrix a = Matrix::from_int_rows(Q, {{1, 2}, {3, 4}});
    CHECK(kronecker(two, a) == a.scaled(q(2)));

    Matrix n = Matrix::from_int_rows(Q, {{0, 1}, {0, 0}});
    Matrix nn = kronecker(n, n);
    CHECK(nn.rows() == 4);
    // single 1 at tensor coordinates ((0,0),(1,1)) = row 0*2+0, col 1*2+1
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(nn.at(i, j) == ((i == 0 && j == 3) ? q(1) : q(0)));

    // (A (x) B)(C (x) D) = AC (x) BD, and bilinearity
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix A = rng.matrix(Q, 2, 3), B = rng.matrix(Q, 3, 2);
        Matrix C = rng.matrix(Q, 3, 2), D = rng.matrix(Q, 2, 3);
        CHECK(kronecker(A, B) * kronecker(C, D) == kronecker(A * C, B * D));
        Matrix A2 = rng.matrix(Q, 2, 3);
        CHECK(kronecker(A + A2, B) == kronecker(A, B) + kronecker(A2, B));
    }
}

TEST_CASE("minimal polynomial") {
    CHECK(minimal_polynomial(Matrix::identity(Q, 4)) == Polynomial::from_ints(Q, {-1, 1}));

    Matrix jordan(Q, 3, 3);
    jordan.at(0, 1) = q(1);
    jordan.at(1, 2) = q(1);
    CHECK(minimal_polynomial(jordan) == Polynomial::from_ints(Q, {0, 0, 0, 1}));

    Matrix diag(Q, 2, 2);
    diag.at(0, 0) = q(1);
    diag.at(1, 1) = q(2);
    // oracle: evaluate candidates (x-1)(x-2) = x^2 - 3x + 2
    Polynomial expected = Polynomial::from_ints(Q, {2, -3, 1});
    CHECK(expected.eval_matrix(diag).is_zero());
    CHECK(minimal_polynomial(diag) == expected);
}

TEST_CASE("polynomial factorization examples") {
    // x^2 - 1 over Q
    auto fac = factor_univariate(Polynomial::from_ints(Q, {-1, 0, 1}));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == Polynomial::from_ints(Q, {-1, 1}));
    CHECK(fac.factors[1].first == Polynomial::from_ints(Q, {1, 1}));

    // x^2 + x + 1 over GF(2): irreducible (no roots, degree 2)
    CHECK(is_irreducible(Polynomial::from_ints(F2, {1, 1, 1})));

    // x^2 + 1 over Q: irreducible
    CHECK(is_irreducible(Polynomial::from_ints(Q, {1, 0, 1})));

    // degree cap over Q
    std::vector<long> big(14, 0);
    big[0] = 1;
    big[13] = 1;
    CHECK_THROWS_AS((void)factor_univariate(Polynomial::from_ints(Q, big)), degree_cap_exceeded);
}

TEST_CASE("factorization remultiplies to the input") {
    auto check_roundtrip = [](const Polynomial& p) {
        auto fac = factor_univariate(p);
        Polynomial prod = Polynomial::constant(fac.unit);
        for (const auto& [f, mult] : fac.factors) {
            CHECK(is_irreducible(f));
            for (int i = 0; i < mult; ++i) prod = prod * f;
        }
        CHECK(prod == p);
    };

    // structured cases over Q
    check_roundtrip(Polynomial::from_ints(Q, {0, 0, 2, 2}));           // 2x^2(x+1)
    check_roundtrip(Polynomial::from_ints(Q, {1, 2, 1}));              // (x+1)^2
    check_roundtrip(Polynomial::from_ints(Q, {2, 0, 3, 0, 1}));        // (x^2+1)(x^2+2)
    check_roundtrip(Polynomial::from_ints(Q, {-2, 0, -1, 0, 1}));      // (x^2+1)(x^2-2)
    check_roundtrip(Polynomial::from_ints(Q, {6, 11, 6, 1}));          // (x+1)(x+2)(x+3)
    check_roundtrip(Polynomial::from_ints(Q, {1, 0, 0, 0, 0, 0, 1}));  // x^6+1 = (x^2+1)(x^4-x^2+1)
    check_roundtrip(Polynomial::from_ints(Q, {4, 0, 4, 0, 1}));        // (x^2+2)^2
    {
        // non-monic with rational coefficients
        Polynomial p(Q, {q(1, 2), q(3, 4), q(5, 6)});
        check_roundtrip(p);
    }

    // random over GF(2), GF(5): product of random factors
    for (auto field : {F2, F5}) {
        Rng rng(field.characteristic());
        for (int trial = 0; trial < 30; ++trial) {
            Polynomial p = Polynomial::constant(Scalar::one(field));
            int nf = 1 + static_cast<int>(rng.next() % 3);
            for (int i = 0; i < nf; ++i) {
                std::vector<Scalar> cs;
                int deg = 1 + static_cast<int>(rng.next() % 3);
                for (int d = 0; d <= deg; ++d)
                    cs.push_back(Scalar::of_int(field, static_cast<long>(rng.next() % field.characteristic())));
                cs.back() = Scalar::one(field);
                p = p * Polynomial(field, cs);
            }
            check_roundtrip(p);
        }
    }

    // Frobenius-compressed case over GF(2): (x^2 + x + 1)^2 = x^4 + x^2 + 1
    check_roundtrip(Polynomial::from_ints(F2, {1, 0, 1, 0, 1}));
}

TEST_CASE("quotient chart") {
    Subspace w = Subspace::span(3, {{q(1), q(2), q(0)}}, Q);
    QuotientChart chart = quotient_chart(w);
    CHECK(chart.projection.rows() == 2);
    // kernel of the projection is exactly W
    CHECK(kernel_subspace(chart.projection) == w);
    // section is a right inverse
    CHECK(chart.projection * chart.section == Matrix::identity(Q, 2));
}

TEST_CASE("large prime fields stay exact") {
    // p just under 2^31; products must not overflow the residue arithmetic
    const Field fp = Field::gf(2147483647u);
    Scalar a = Scalar::of_int(fp, 2147483646L); // -1
    CHECK((a * a).is_one());
    Scalar b = Scalar::of_int(fp, 1234567891L);
    CHECK((b * b.inverse()).is_one());
    CHECK_THROWS_AS((void)Field::gf(2147483646u), invalid_structure);
}

TEST_CASE("GF(p) factorization handles high degrees") {
    const Field f2 = Field::gf(2);
    // x^16 + x^5 + 1 over GF(2): no cap applies over prime fields
    std::vector<long> cs(17, 0);
    cs[0] = 1; cs[5] = 1; cs[16] = 1;
    Polynomial p = Polynomial::from_ints(f2, cs);
    auto fac = factor_univariate(p);
    Polynomial prod = Polynomial::constant(fac.unit);
    long total = 0;
    for (const auto& [g, m] : fac.factors) {
        CHECK(is_irreducible(g));
        total += g.degree() * m;
        for (int i = 0; i < m; ++i) prod = prod * g;
    }
    CHECK(total == 16);
    CHECK(prod == p);

    // x^(p^2) - x over GF(5) splits into all monic irreducibles of degree <= 2
    const Field f5 = Field::gf(5);
    Polynomial frob = Polynomial::monomial(f5, 25, Scalar::one(f5)) - Polynomial::x(f5);
    auto fac5 = factor_univariate(frob);
    std::size_t deg1 = 0, deg2 = 0;
    for (const auto& [g, m] : fac5.factors) {
        CHECK(m == 1);
        if (g.degree() == 1) ++deg1;
        if (g.degree() == 2) ++deg2;
    }
    CHECK(deg1 == 5);  // x - c
    CHECK(deg2 == 10); // (25 - 5)/2 irreducible quadratics
}

TEST_CASE("random rational polynomials remultiply through the factorizer") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Scalar> cs;
        int deg = 1 + static_cast<int>(rng.next() % 6);
        for (int d = 0; d <= deg; ++d) {
            long num = static_cast<long>(rng.next() % 11) - 5;
            long den = 1 + static_cast<long>(rng.next() % 4);
            cs.push_back(Scalar::of_fraction(Q, num, den));
        }
        Polynomial p(Q, cs);
        if (p.degree() < 1) continue;
        auto fac = factor_univariate(p);
        Polynomial prod = Polynomial::constant(fac.unit);
        for (const auto& [f, m] : fac.factors)
            for (int i = 0; i < m; ++i) prod = prod * f;
        CHECK(prod == p);
    }
}

TEST_CASE("degenerate subspace edges") {
    Subspace zero = Subspace::zero(Q, 3);
    CHECK(subspace_sum(zero, zero) == zero);
    CHECK(subspace_intersect(zero, Subspace::full(Q, 3)) == zero);
    CHECK(zero.contains(vec_zero(Q, 3)));
    // preimage under the zero map: everything maps into any W containing 0
    Matrix zmap(Q, 2, 3);
    CHECK(preimage(zmap, Subspace::zero(Q, 2)) == Subspace::full(Q, 3));
    // intersect of a space with itself in dim 0
    Subspace pt = Subspace::full(Q, 0);
    CHECK(subspace_sum(pt, pt).dim() == 0);
}
