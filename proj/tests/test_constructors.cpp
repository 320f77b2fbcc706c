#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalglab/constructors.hpp"
#include "coalglab/lattice.hpp"

using namespace coalglab;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::gf(2);
const Field F3 = Field::gf(3);

Scalar q(long n, long d = 1) { return Scalar::of_fraction(Q, n, d); }

} // namespace

TEST_CASE("every constructor output passes the coalgebra axioms") {
    Algebra gauss = gaussian_algebra(Q);
    AlgebraAutomorphism id = identity_automorphism(gauss);
    AlgebraAutomorphism conj = conjugation_automorphism(gauss);

    std::vector<Coalgebra> corpus;
    corpus.push_back(divided_power(Q, 0));
    corpus.push_back(divided_power(Q, 4));
    corpus.push_back(divided_power(F2, 3));
    corpus.push_back(coproduct({divided_power(Q, 1), divided_power(Q, 1)}).coalgebra);
    corpus.push_back(coproduct({divided_power(Q, 2), golden_ex63()}).coalgebra);
    corpus.push_back(tensor_coalgebra(dual_coalgebra(gauss), divided_power(Q, 2)));
    corpus.push_back(tensor_coalgebra(divided_power(Q, 1), divided_power(Q, 1)));
    corpus.push_back(graded_series_coalgebra(gauss, id, 3));
    corpus.push_back(graded_series_coalgebra(gauss, conj, 3));
    corpus.push_back(cotensor_truncated(dual_coalgebra(gauss), dual_bicomodule(bimodule_from_automorphism(gauss, conj)), 3));
    corpus.push_back(truncated_path_coalgebra(loop_quiver(), 4));
    corpus.push_back(truncated_path_coalgebra(a2_quiver(), 1));
    corpus.push_back(truncated_path_coalgebra(a2_quiver(), 3));
    corpus.push_back(generalized_path_coalgebra(a2_quiver(), 2, F3));
    {
        QuiverPresentation lq = loop_quiver();
        lq.attached = {dual_coalgebra(gauss)};
        corpus.push_back(generalized_path_coalgebra(lq, 3));
    }
    corpus.push_back(golden_ex61(4));
    corpus.push_back(golden_ex63());
    corpus.push_back(golden_ex64(4));
    corpus.push_back(dual_coalgebra(quaternion_algebra(Q)));

    for (const auto& c : corpus) {
        Diagnostics d = verify_coalgebra(c);
        if (!d.valid) {
            CAPTURE(d.violations.front());
            CHECK(false);
        } else {
            CHECK(true);
        }
        if (c.grading) {
            std::size_t covered = 0;
            for (const auto& blk : *c.grading) covered += blk.size();
            CHECK(covered == c.dim);
        }
    }
}

TEST_CASE("divided power") {
    Coalgebra dc0 = divided_power(Q, 0);
    CHECK(dc0.dim == 1);
    CHECK(dc0.counit == Vec{q(1)});

    Coalgebra dc2 = divided_power(Q, 2);
    // Delta(c_2) = c0 (x) c2 + c1 (x) c1 + c2 (x) c0
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(dc2.comult.at(2, i, j) == ((i + j == 2) ? q(1) : q(0)));
    CHECK(is_cocommutative(dc2));

    // convolution dual of DC_5 is Q[x]/(x^6) on the nose
    Algebra d5 = convolution_dual(divided_power(Q, 5));
    CHECK(d5.mult == truncated_polynomial_algebra(Q, 5).mult);
    CHECK(verify_algebra(d5).valid);
}

TEST_CASE("coproduct") {
    Coalgebra dc2 = divided_power(Q, 2);
    CoproductResult single = coproduct({dc2});
    CHECK(single.coalgebra.comult == dc2.comult);

    CoproductResult two = coproduct({divided_power(Q, 1), divided_power(Q, 1)});
    CHECK(two.coalgebra.dim == 4);
    CHECK(comodule_socle(regular_comodule(two.coalgebra)).dim() == 2);

    // embeddings are coalgebra morphisms
    for (std::size_t i = 0; i < 2; ++i) {
        CoalgebraMap m{divided_power(Q, 1), two.coalgebra, two.embeddings[i]};
        CHECK(verify_morphism(m).ok);
    }

    CHECK_THROWS_AS((void)coproduct({divided_power(Q, 1), divided_power(F2, 1)}), field_mismatch);
}

TEST_CASE("tensor coalgebra") {
    // k (x) C = C
    Coalgebra k = divided_power(Q, 0);
    Coalgebra c = golden_ex63();
    Coalgebra t = tensor_coalgebra(k, c);
    CHECK(t.comult == c.comult);
    CHECK(t.counit == c.counit);

    // DC_1 (x) DC_1: dim 4, coradical dim 1
    Coalgebra tt = tensor_coalgebra(divided_power(Q, 1), divided_power(Q, 1));
    CHECK(tt.dim == 4);
    CHECK(coradical_filtration(tt).dims().front() == 1);

    // Q(i)* (x) DC_N is isomorphic to graded_series(Q(i), id, N) by the
    // degree-major basis permutation (a, n) -> e_{a n}
    const std::size_t N = 3;
    Algebra gauss = gaussian_algebra(Q);
    Coalgebra lhs = tensor_coalgebra(dual_coalgebra(gauss), divided_power(Q, N));
    Coalgebra rhs = graded_series_coalgebra(gauss, identity_automorphism(gauss), N);
    Matrix perm(Q, 2 * (N + 1), 2 * (N + 1));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t n = 0; n <= N; ++n) perm.at(n * 2 + a, a * (N + 1) + n) = q(1);
    MorphismReport rep = verify_morphism({lhs, rhs, perm});
    CHECK(rep.ok);
    CHECK(rep.iso);
}

TEST_CASE("graded series coalgebra") {
    // D = k: divided power
    Algebra k = ground_field_algebra(Q);
    Coalgebra base = graded_series_coalgebra(k, identity_automorphism(k), 4);
    CHECK(base.comult == divided_power(Q, 4).comult);
    CHECK(base.counit == divided_power(Q, 4).counit);

    Algebra gauss = gaussian_algebra(Q);
    // bit-exact equality with the golden tables
    Coalgebra s_id = graded_series_coalgebra(gauss, identity_automorphism(gauss), 4);
    CHECK(s_id.comult == golden_ex61(4).comult);
    CHECK(s_id.counit == golden_ex61(4).counit);

    Coalgebra s_conj = graded_series_coalgebra(gauss, conjugation_automorphism(gauss), 4);
    CHECK(s_conj.comult == golden_ex64(4).comult);
    CHECK(s_conj.counit == golden_ex64(4).counit);

    // bit-equal to the dual of the skew polynomial quotient
    for (std::size_t n : {0u, 1u, 3u}) {
        Coalgebra via_dual = dual_coalgebra(skew_polynomial_quotient(gauss, conjugation_automorphism(gauss), n));
        Coalgebra direct = graded_series_coalgebra(gauss, conjugation_automorphism(gauss), n);
        CHECK(via_dual.comult == direct.comult);
        CHECK(via_dual.counit == direct.counit);
    }

    // refuses a non-division coefficient algebra
    CHECK_THROWS_AS((void)graded_series_coalgebra(gaussian_algebra(F2),
                                                 identity_automorphism(gaussian_algebra(F2)), 2),
                    invalid_structure);
}

TEST_CASE("cotensor coalgebra") {
    Algebra gauss = gaussian_algebra(Q);
    Coalgebra d_star = dual_coalgebra(gauss);

    // M = 0 gives back C0
    BicomoduleData zero;
    zero.coalgebra = d_star;
    zero.dim = 0;
    zero.left = Tensor3(Q, 0, 2, 0);
    zero.right = Tensor3(Q, 0, 0, 2);
    Coalgebra t0 = cotensor_truncated(d_star, zero, 3);
    CHECK(t0.dim == 2);
    CHECK(t0.comult == d_star.comult);

    // C0 = k, M = k: divided power
    Algebra k = ground_field_algebra(Q);
    Coalgebra kstar = dual_coalgebra(k);
    BicomoduleData kreg = dual_bicomodule(bimodule_from_automorphism(k, identity_automorphism(k)));
    Coalgebra tk = cotensor_truncated(kstar, kreg, 4);
    CHECK(tk.dim == 5);
    CHECK(tk.comult == divided_power(Q, 4).comult);

    // C0 = Q(i)*, M = (Q(i)_alpha)*: a chain coalgebra of type Q(i)
    for (bool twist : {false, true}) {
        AlgebraAutomorphism alpha =
            twist ? conjugation_automorphism(gauss) : identity_automorphism(gauss);
        BicomoduleData m = dual_bicomodule(bimodule_from_automorphism(gauss, alpha));
        Coalgebra t = cotensor_truncated(d_star, m, 3);
        CHECK(t.dim == 8);
        CHECK(verify_coalgebra(t).valid);
        CHECK(coradical_filtration(t).dims() == std::vector<std::size_t>{2, 4, 6, 8});
        ChainVerdict cv = is_chain_coalgebra(t);
        CHECK(cv.verdict == Verdict::yes);
    }

    // rejects a non-cosemisimple C0
    Coalgebra dc1 = divided_power(Q, 1);
    BicomoduleData bad;
    bad.coalgebra = dc1;
    bad.dim = 0;
    bad.left = Tensor3(Q, 0, 2, 0);
    bad.right = Tensor3(Q, 0, 0, 2);
    CHECK_THROWS_AS((void)cotensor_truncated(dc1, bad, 2), invalid_structure);
}

TEST_CASE("path coalgebras") {
    // loop: divided power, bit-exact
    for (auto field : {Q, F2}) {
        Coalgebra lp = truncated_path_coalgebra(loop_quiver(), 3, field);
        CHECK(lp.comult == divided_power(field, 3).comult);
        CHECK(lp.counit == divided_power(field, 3).counit);
    }

    // A2, N >= 1: dim 3 and Delta(a) = u (x) a + a (x) v
    Coalgebra a2 = truncated_path_coalgebra(a2_quiver(), 1);
    REQUIRE(a2.dim == 3);
    CHECK(a2.comult.at(2, 0, 2) == q(1));
    CHECK(a2.comult.at(2, 2, 1) == q(1));
    CHECK(a2.counit == Vec{q(1), q(1), q(0)});
    // truncating higher changes nothing: the only path has length 1
    CHECK(truncated_path_coalgebra(a2_quiver(), 3).dim == 3);

    // two isolated vertices: k x k dual, semisimple
    QuiverPresentation iso2;
    iso2.vertex_count = 2;
    Coalgebra v2 = truncated_path_coalgebra(iso2, 2);
    CHECK(v2.dim == 2);
    CHECK(coradical_filtration(v2).dims() == std::vector<std::size_t>{2});

    // double loop at one vertex: paths grow as words
    QuiverPresentation two_loops;
    two_loops.vertex_count = 1;
    two_loops.arrows = {{0, 0}, {0, 0}};
    Coalgebra tl = truncated_path_coalgebra(two_loops, 2);
    CHECK(tl.dim == 1 + 2 + 4);
    CHECK(verify_coalgebra(tl).valid);
}

TEST_CASE("generalized path coalgebra") {
    Algebra gauss = gaussian_algebra(Q);

    // loop with attached k reduces to the divided power coalgebra
    QuiverPresentation lq = loop_quiver();
    lq.attached = {divided_power(Q, 0)};
    Coalgebra lk = generalized_path_coalgebra(lq, 4);
    CHECK(lk.comult == divided_power(Q, 4).comult);

    // loop with attached Q(i)*: bit-equal to graded_series(Q(i), id, N)
    QuiverPresentation lgauss = loop_quiver();
    lgauss.attached = {dual_coalgebra(gauss)};
    for (std::size_t n : {0u, 2u, 4u}) {
        Coalgebra got = generalized_path_coalgebra(lgauss, n);
        Coalgebra want = graded_series_coalgebra(gauss, identity_automorphism(gauss), n);
        CHECK(got.comult == want.comult);
        CHECK(got.counit == want.counit);
    }

    // two vertices, no arrows: coproduct of the attachments
    QuiverPresentation pair;
    pair.vertex_count = 2;
    pair.attached = {divided_power(Q, 0), dual_coalgebra(gauss)};
    Coalgebra pc = generalized_path_coalgebra(pair, 3);
    CHECK(pc.dim == 3);
    CHECK(coradical_filtration(pc).dims() == std::vector<std::size_t>{3});

    // attaching k explicitly agrees with the bare-quiver construction
    {
        QuiverPresentation withk = a2_quiver();
        withk.attached = {divided_power(Q, 0), divided_power(Q, 0)};
        Coalgebra attached = generalized_path_coalgebra(withk, 2);
        Coalgebra bare = truncated_path_coalgebra(a2_quiver(), 2);
        CHECK(attached.comult == bare.comult);
        CHECK(attached.counit == bare.counit);
    }

    // bare-quiver equality between the two path constructors
    for (std::size_t n : {1u, 2u}) {
        Coalgebra bare = truncated_path_coalgebra(a2_quiver(), n, F3);
        Coalgebra gen = generalized_path_coalgebra(a2_quiver(), n, F3);
        CHECK(bare.comult == gen.comult);
        CHECK(bare.counit == gen.counit);
    }
}

TEST_CASE("golden tables") {
    Coalgebra c63 = golden_ex63();
    CHECK(c63.dim == 4);
    CHECK(c63.counit == Vec{q(1), q(0), q(0), q(0)});
    CHECK(verify_coalgebra(c63).valid);

    CHECK(golden_ex61(4).dim == 10);
    CHECK(golden_ex64(4).dim == 10);
    CHECK_FALSE(is_cocommutative(golden_ex64(2)));
    CHECK(is_cocommutative(golden_ex61(2)));

    // block structure: coproduct embeddings are subcoalgebra inclusions with
    // pairwise-zero hom between chain blocks of distinct type
    CoproductResult mix = coproduct({divided_power(Q, 2), golden_ex63()});
    Comodule reg = regular_comodule(mix.coalgebra);
    Subspace b1 = Subspace::span(7, {mix.embeddings[0].col(0), mix.embeddings[0].col(1), mix.embeddings[0].col(2)}, Q);
    Subspace b2 = Subspace::span(7, {mix.embeddings[1].col(0), mix.embeddings[1].col(1), mix.embeddings[1].col(2), mix.embeddings[1].col(3)}, Q);
    CHECK(is_subcoalgebra(mix.coalgebra, b1));
    CHECK(is_subcoalgebra(mix.coalgebra, b2));
    SubComodule s1 = sub_comodule(reg, b1);
    SubComodule s2 = sub_comodule(reg, b2);
    CHECK(hom_space(s1.comodule, s2.comodule).empty());
    CHECK(hom_space(s2.comodule, s1.comodule).empty());
}
