// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exit status is the number
// of failed criteria.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "coalglab/runner.hpp"

using namespace coalglab;

namespace {

const Field Q = Field::rationals();

Scalar q(long n, long d = 1) { return Scalar::of_fraction(Q, n, d); }

struct Criterion {
    int number;
    std::string title;
    std::function<void(std::vector<std::string>&)> body; // push failure messages
};

#define EXPECT(cond, msg)                                   \
    do {                                                    \
        if (!(cond)) failures.push_back(msg);               \
    } while (0)

// The corpus member list for the GF(p) oracle suites.
struct CorpusMember {
    std::string name;
    Coalgebra coalgebra;
    bool expect_chain;
    bool expect_distributive;
};

std::vector<CorpusMember> oracle_corpus(const Field& f) {
    std::vector<CorpusMember> corpus;
    for (std::size_t n = 0; n <= 3; ++n)
        corpus.push_back({"DC_" + std::to_string(n), divided_power(f, n), true, true});
    corpus.push_back({"DC_1+DC_1",
                      coproduct({divided_power(f, 1), divided_power(f, 1)}).coalgebra, false, true});
    corpus.push_back({"DC_2+DC_3",
                      coproduct({divided_power(f, 2), divided_power(f, 3)}).coalgebra, false, true});
    corpus.push_back({"A2", truncated_path_coalgebra(a2_quiver(), 1, f), false, false});
    corpus.push_back({"loop_N2", truncated_path_coalgebra(loop_quiver(), 2, f), true, true});
    corpus.push_back({"loop_N3", truncated_path_coalgebra(loop_quiver(), 3, f), true, true});
    if (f.characteristic() % 4 == 3) {
        // GF(p) analogue of ex63: 4-dim chain coalgebra of type GF(p)(i)
        Algebra g = gaussian_algebra(f);
        corpus.push_back({"ex63_analogue",
                          dual_coalgebra(trivial_extension(g, conjugation_automorphism(g),
                                                           identity_automorphism(g))),
                          true, true});
    }
    return corpus;
}

std::vector<std::pair<std::string, Coalgebra>> chain_corpus() {
    std::vector<std::pair<std::string, Coalgebra>> chains;
    Algebra gauss = gaussian_algebra(Q);
    chains.emplace_back("DC_3(Q)", divided_power(Q, 3));
    chains.emplace_back("DC_5(Q)", divided_power(Q, 5));
    chains.emplace_back("ex63", golden_ex63());
    chains.emplace_back("ex61_N4", golden_ex61(4));
    chains.emplace_back("ex64_N4", golden_ex64(4));
    chains.emplace_back("dual_skew_conj_N3",
                        dual_coalgebra(skew_polynomial_quotient(gauss, conjugation_automorphism(gauss), 3)));
    chains.emplace_back("cotensor_conj_N3",
                        cotensor_truncated(dual_coalgebra(gauss),
                                           dual_bicomodule(bimodule_from_automorphism(
                                               gauss, conjugation_automorphism(gauss))),
                                           3));
    for (std::uint32_t p : {2u, 3u}) {
        Field f = Field::gf(p);
        chains.emplace_back("DC_3(GF" + std::to_string(p) + ")", divided_power(f, 3));
    }
    {
        Algebra g3 = gaussian_algebra(Field::gf(3));
        chains.emplace_back("ex63_analogue(GF3)",
                            dual_coalgebra(trivial_extension(g3, conjugation_automorphism(g3),
                                                             identity_automorphism(g3))));
    }
    return chains;
}

void criterion_1(std::vector<std::string>& failures) {
    Algebra gauss = gaussian_algebra(Q);
    Algebra a63 = trivial_extension(gauss, conjugation_automorphism(gauss), identity_automorphism(gauss));
    Coalgebra c = dual_coalgebra(a63);
    Coalgebra golden = golden_ex63();
    EXPECT(c.dim == 4, "dimension != 4");
    EXPECT(c.comult == golden.comult, "comultiplication table is not bit-exact");
    EXPECT(c.counit == golden.counit, "counit is not bit-exact");
    EXPECT(is_chain_coalgebra(c).verdict == Verdict::yes, "is_chain != yes");
    EXPECT(!is_cocommutative(c), "unexpectedly cocommutative");
}

void criterion_2(std::vector<std::string>& failures) {
    Algebra gauss = gaussian_algebra(Q);
    Coalgebra g_id = graded_series_coalgebra(gauss, identity_automorphism(gauss), 4);
    Coalgebra g_conj = graded_series_coalgebra(gauss, conjugation_automorphism(gauss), 4);
    EXPECT(g_id.dim == 10 && g_conj.dim == 10, "dimension != 10");
    EXPECT(g_id.comult == golden_ex61(4).comult && g_id.counit == golden_ex61(4).counit,
           "ex61 table mismatch at N=4");
    EXPECT(g_conj.comult == golden_ex64(4).comult && g_conj.counit == golden_ex64(4).counit,
           "ex64 table mismatch at N=4 (sign pattern)");
}

void criterion_3(std::vector<std::string>& failures) {
    Coalgebra dc5 = divided_power(Q, 5);
    EXPECT(verify_coalgebra(dc5).valid, "axioms fail");
    // coradical_filtration computes the annihilator and wedge chains and
    // aborts on disagreement, so a successful call certifies both methods
    Filtration fil = coradical_filtration(dc5);
    EXPECT(fil.dims() == std::vector<std::size_t>({1, 2, 3, 4, 5, 6}), "filtration dims wrong");

    // explicit isomorphism Q[x]/(x^6) -> dual(DC_5), x^j |-> (e^1)*^j
    Algebra a = convolution_dual(dc5);
    Algebra poly = truncated_polynomial_algebra(Q, 5);
    Matrix theta(Q, 6, 6);
    Vec p = a.unit;
    for (std::size_t j = 0; j < 6; ++j) {
        for (std::size_t r = 0; r < 6; ++r) theta.at(r, j) = p[r];
        p = a.multiply(p, a.basis_vector(1));
    }
    Diagnostics morph = verify_algebra_morphism(poly, a, theta);
    EXPECT(morph.valid, "x |-> e^1 is not an algebra morphism");
    EXPECT(invertible(theta), "x |-> e^1 is not invertible");

    QuiverReport quiver = ext_quiver(dc5);
    EXPECT(quiver.vertices.size() == 1, "expected one vertex");
    EXPECT(quiver.arrows.size() == 1 && quiver.arrows[0].first == quiver.arrows[0].second,
           "expected exactly one loop");
}

void criterion_4(std::vector<std::string>& failures) {
    Algebra gauss = gaussian_algebra(Q);
    for (std::size_t n = 0; n <= 4; ++n) {
        Coalgebra via_dual =
            dual_coalgebra(skew_polynomial_quotient(gauss, identity_automorphism(gauss), n));
        Coalgebra direct = graded_series_coalgebra(gauss, identity_automorphism(gauss), n);
        EXPECT(via_dual.comult == direct.comult && via_dual.counit == direct.counit,
               "dual(skew) != graded series at N=" + std::to_string(n));

        Coalgebra tensor = tensor_coalgebra(dual_coalgebra(gauss), divided_power(Q, n));
        Matrix perm(Q, 2 * (n + 1), 2 * (n + 1));
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t d = 0; d <= n; ++d) perm.at(d * 2 + a, a * (n + 1) + d) = q(1);
        MorphismReport rep = verify_morphism({tensor, direct, perm});
        EXPECT(rep.ok && rep.iso, "tensor decomposition map fails at N=" + std::to_string(n));
    }
}

void criterion_5(std::vector<std::string>& failures) {
    Algebra gauss = gaussian_algebra(Q);
    Matrix seed_id = Matrix::identity(Q, 2);
    Matrix seed_conj = seed_id;
    seed_conj.at(1, 1) = q(-1);
    for (std::size_t n = 0; n <= 3; ++n) {
        Coalgebra cot = cotensor_truncated(
            dual_coalgebra(gauss),
            dual_bicomodule(bimodule_from_automorphism(gauss, conjugation_automorphism(gauss))), n);
        Coalgebra dsk =
            dual_coalgebra(skew_polynomial_quotient(gauss, conjugation_automorphism(gauss), n));
        auto lift = graded_iso_lift(cot, dsk, {seed_id, seed_conj});
        if (!lift) {
            failures.push_back("no graded isomorphism found at N=" + std::to_string(n));
            continue;
        }
        MorphismReport rep = verify_morphism(*lift);
        EXPECT(rep.ok && rep.iso, "lifted map fails verify_morphism at N=" + std::to_string(n));
    }
}

void criterion_6(std::vector<std::string>& failures) {
    for (std::uint32_t p : {2u, 3u}) {
        Field f = Field::gf(p);
        std::string fp = "GF(" + std::to_string(p) + ") ";
        for (const auto& member : oracle_corpus(f)) {
            Comodule reg = regular_comodule(member.coalgebra);
            LatticeSnapshot lat = enumerate_subcomodules(reg);
            LatticeProperties right = lattice_properties(lat);
            StephensonReport steph = stephenson_check(reg);
            DistributivityVerdict structural = is_distributive_coalgebra(member.coalgebra);
            LatticeProperties ideals =
                lattice_properties(enumerate_left_ideals(convolution_dual(member.coalgebra)));
            LatticeProperties left =
                lattice_properties(enumerate_subcomodules(regular_comodule(co_opposite(member.coalgebra))));
            ChainVerdict chain_struct = is_chain_coalgebra(member.coalgebra);
            ChainRingCertificate chain_dual = is_left_chain_ring(convolution_dual(member.coalgebra),
                                                                 default_enumeration_budget);

            bool dist = right.is_distributive;
            EXPECT(steph.distributive == dist, fp + member.name + ": Stephenson disagrees");
            EXPECT((structural.verdict == Verdict::yes) == dist,
                   fp + member.name + ": structural verdict disagrees");
            EXPECT(ideals.is_distributive == dist, fp + member.name + ": dual ideal lattice disagrees");
            EXPECT(left.is_distributive == dist, fp + member.name + ": co-opposite disagrees");
            EXPECT(left.is_chain == right.is_chain, fp + member.name + ": left/right chain disagree");
            EXPECT((chain_struct.verdict == Verdict::yes) == right.is_chain,
                   fp + member.name + ": structural chain verdict disagrees");
            EXPECT(chain_dual.is_chain == right.is_chain,
                   fp + member.name + ": dual chain-ring route disagrees");

            EXPECT(dist == member.expect_distributive,
                   fp + member.name + ": expected distributive=" +
                       std::to_string(member.expect_distributive));
            EXPECT(right.is_chain == member.expect_chain,
                   fp + member.name + ": expected chain=" + std::to_string(member.expect_chain));
            if (!dist) {
                // a concrete serialized witness must exist and reload
                EXPECT(right.witness.has_value(), fp + member.name + ": missing triple witness");
                if (right.witness) {
                    Json w = to_json(*right.witness);
                    Subspace a = subspace_from_json(w.at("a"), f);
                    Subspace b = subspace_from_json(w.at("b"), f);
                    Subspace c = subspace_from_json(w.at("c"), f);
                    Subspace lhs = subspace_intersect(a, subspace_sum(b, c));
                    Subspace rhs =
                        subspace_sum(subspace_intersect(a, b), subspace_intersect(a, c));
                    EXPECT(lhs != rhs, fp + member.name + ": reloaded witness no longer violates");
                }
            }
        }

        // the isotypic comodule double DC_1 + DC_1 over DC_1 is the
        // non-distributive DC_1-plus-DC_1 member, with a Stephenson witness
        Coalgebra dc1 = divided_power(f, 1);
        Comodule doubled = direct_sum_comodule({regular_comodule(dc1), regular_comodule(dc1)});
        LatticeProperties dprops = lattice_properties(enumerate_subcomodules(doubled));
        StephensonReport dsteph = stephenson_check(doubled);
        EXPECT(!dprops.is_distributive, fp + "comodule double DC_1+DC_1 should not be distributive");
        EXPECT(!dsteph.distributive, fp + "comodule double: Stephenson should fail");
        EXPECT(dprops.witness.has_value() && dsteph.witness.has_value(),
               fp + "comodule double: witnesses missing");
        if (dsteph.witness) {
            Json w = to_json(*dsteph.witness);
            Subspace n = subspace_from_json(w.at("n"), f);
            Subspace l = subspace_from_json(w.at("l"), f);
            EXPECT(is_subcomodule(doubled, n) && is_subcomodule(doubled, l),
                   fp + "comodule double: reloaded Stephenson pair invalid");
        }
    }
}

void criterion_7(std::vector<std::string>& failures) {
    for (std::uint32_t p : {2u, 3u}) {
        Field f = Field::gf(p);
        for (const auto& member : oracle_corpus(f)) {
            AnnihilatorReport rep = annihilator_check(member.coalgebra);
            EXPECT(rep.ok, "GF(" + std::to_string(p) + ") " + member.name + ": " +
                               (rep.violations.empty() ? "annihilator laws fail"
                                                       : rep.violations.front()));
            EXPECT(rep.injective, "GF(" + std::to_string(p) + ") " + member.name + ": Ann not injective");
        }
    }
}

void criterion_8(std::vector<std::string>& failures) {
    std::uint64_t seed = 0xacce97ed;
    for (const auto& [name, c] : chain_corpus()) {
        DualChainReport rep = dual_chain_analysis(c, default_enumeration_budget, 12, 100, seed++);
        EXPECT(rep.ok, name + ": dual chain analysis failed");
        EXPECT(rep.local, name + ": dual algebra not local");
        EXPECT(rep.powers_match, name + ": J^i != A t^i");
        EXPECT(rep.perp_match, name + ": {C_n}^perp != J^(n+1)");
        EXPECT(rep.samples_decomposed == 100,
               name + ": only " + std::to_string(rep.samples_decomposed) + "/100 samples decomposed");
    }
}

void criterion_9(std::vector<std::string>& failures) {
    Algebra gauss = gaussian_algebra(Q);
    for (bool twist : {false, true}) {
        AlgebraAutomorphism alpha =
            twist ? conjugation_automorphism(gauss) : identity_automorphism(gauss);
        std::string name = twist ? "conj" : "id";
        Bimodule m = bimodule_from_automorphism(gauss, alpha);

        AutomorphismRecovery exact = bimodule_to_automorphism(m, Matrix::identity(Q, 2));
        EXPECT(exact.automorphism.matrix == alpha.matrix, name + ": identity chart does not return alpha");

        std::uint64_t state = twist ? 0x5eed01 : 0x5eed02;
        int produced = 0;
        int attempts = 0;
        while (produced < 20 && attempts < 400) {
            ++attempts;
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            long a = static_cast<long>((state >> 33) % 11) - 5;
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            long b = static_cast<long>((state >> 33) % 11) - 5;
            if (a == 0 && b == 0) continue;
            // left D-module endomorphisms of D are the right multiplications
            Matrix chart = gauss.right_mult(Vec{q(a), q(b)});
            if (!invertible(chart)) continue;
            AutomorphismRecovery rec = bimodule_to_automorphism(m, chart);
            // bimodule_to_automorphism verifies f : M -> D_alpha' internally;
            // confirm the recovered automorphism on top
            EXPECT(verify_automorphism(gauss, rec.automorphism.matrix).valid,
                   name + ": recovered map is not an automorphism");
            ++produced;
        }
        EXPECT(produced == 20, name + ": fewer than 20 random charts produced");
    }
}

void criterion_10(std::vector<std::string>& failures) {
    Algebra gauss = gaussian_algebra(Q);
    for (std::size_t n = 0; n <= 4; ++n) {
        QuiverPresentation lq = loop_quiver();
        lq.attached = {dual_coalgebra(gauss)};
        Coalgebra got = generalized_path_coalgebra(lq, n);
        Coalgebra want = graded_series_coalgebra(gauss, identity_automorphism(gauss), n);
        EXPECT(got.comult == want.comult && got.counit == want.counit,
               "loop with Q(i)* differs from the graded series at N=" + std::to_string(n));

        QuiverPresentation lk = loop_quiver();
        lk.attached = {dual_coalgebra(ground_field_algebra(Q))};
        Coalgebra gotk = generalized_path_coalgebra(lk, n);
        Coalgebra wantk = divided_power(Q, n);
        EXPECT(gotk.comult == wantk.comult && gotk.counit == wantk.counit,
               "loop with k differs from divided_power at N=" + std::to_string(n));
    }
}

void criterion_11(std::vector<std::string>& failures) {
    // every distributive corpus member has only loops and isolated vertices
    std::vector<std::pair<std::string, Coalgebra>> members;
    for (std::uint32_t p : {2u, 3u})
        for (const auto& m : oracle_corpus(Field::gf(p)))
            if (m.expect_distributive)
                members.emplace_back("GF(" + std::to_string(p) + ") " + m.name, m.coalgebra);
    members.emplace_back("DC_5(Q)", divided_power(Q, 5));
    members.emplace_back("ex63", golden_ex63());
    members.emplace_back("ex64_N3", golden_ex64(3));
    members.emplace_back("DC_2+ex63", coproduct({divided_power(Q, 2), golden_ex63()}).coalgebra);
    for (const auto& [name, c] : members) {
        QuiverReport quiver = ext_quiver(c);
        EXPECT(quiver.only_loops_and_isolated(), name + ": non-loop arrow on a distributive member");
    }

    // the A2 member produces a non-loop arrow and a non-distributive verdict
    Coalgebra a2 = truncated_path_coalgebra(a2_quiver(), 1);
    QuiverReport quiver = ext_quiver(a2);
    EXPECT(!quiver.only_loops_and_isolated(), "A2: expected a non-loop arrow");
    EXPECT(quiver.arrows.size() == 1, "A2: expected exactly one arrow");
    DistributivityVerdict verdict = is_distributive_coalgebra(a2);
    EXPECT(verdict.verdict == Verdict::no, "A2: expected a non-distributive verdict");
    EXPECT(verdict.stephenson_witness.has_value(), "A2: missing Stephenson witness");
}

void criterion_12(std::vector<std::string>& failures) {
    namespace fs = std::filesystem;
    fs::path spec_path = fs::path(SPEC_DIR) / "acceptance.json";
    RunOptions opts;
    opts.budget = default_enumeration_budget;
    std::string dir_a = "acc_det_a", dir_b = "acc_det_b";

    opts.out_dir = dir_a;
    RunResult a = run_spec_file(spec_path.string(), opts);
    opts.out_dir = dir_b;
    RunResult b = run_spec_file(spec_path.string(), opts);

    EXPECT(a.exit_code == 0, "acceptance spec run failed with exit " + std::to_string(a.exit_code));
    EXPECT(a.files_written.size() == b.files_written.size(), "file lists differ");
    for (std::size_t i = 0; i < std::min(a.files_written.size(), b.files_written.size()); ++i) {
        std::ifstream fa(a.files_written[i]), fb(b.files_written[i]);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        EXPECT(!sa.str().empty(), a.files_written[i] + " is empty");
        EXPECT(sa.str() == sb.str(),
               "byte difference between runs: " + a.files_written[i] + " vs " + b.files_written[i]);
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "golden table ex63 (dual of the trivial extension), bit-exact", criterion_1},
        {2, "golden tables ex61/ex64 at truncation N=4, bit-exact", criterion_2},
        {3, "divided powers: axioms, filtration, dual algebra, Ext quiver", criterion_3},
        {4, "graded series = dual of skew quotient; tensor decomposition (N <= 4)", criterion_4},
        {5, "cotensor vs dual skew quotient: graded isomorphism lift (N <= 3)", criterion_5},
        {6, "oracle equivalence suite over GF(2) and GF(3)", criterion_6},
        {7, "annihilator laws and injectivity on the enumerated corpus", criterion_7},
        {8, "dual chain analysis: local, t-powers, perps, 100 unit*t^n samples", criterion_8},
        {9, "bimodule-to-automorphism round trip, 20 randomized charts each", criterion_9},
        {10, "generalized path coalgebra of a loop (N <= 4), bit-exact", criterion_10},
        {11, "Ext quivers of distributive members: loops and isolated points only", criterion_11},
        {12, "determinism: two acceptance spec runs are byte-identical", criterion_12},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::vector<std::string> failures;
        try {
            c.body(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        if (failures.empty()) {
            std::cout << "[PASS] criterion " << c.number << ": " << c.title << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] criterion " << c.number << ": " << c.title << "\n";
            for (const auto& f : failures) std::cout << "       - " << f << "\n";
        }
    }
    if (failed == 0)
        std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    else
        std::cout << failed << " acceptance criteria FAILED\n";
    return failed;
}
