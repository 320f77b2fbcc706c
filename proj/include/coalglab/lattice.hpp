#ifndef COALGLAB_LATTICE_HPP
#define COALGLAB_LATTICE_HPP

#include "coalglab/constructors.hpp"

namespace coalglab {

// Complete submodule/ideal lattice, members in canonical sorted order.
struct LatticeSnapshot {
    std::vector<Subspace> members;
};

struct TripleWitness {
    Subspace a, b, c; // a ^ (b v c) != (a ^ b) v (a ^ c)
};

struct LatticeProperties {
    bool is_chain = false;
    bool is_distributive = false;
    std::optional<TripleWitness> witness; // set when not distributive
};

struct StephensonWitness {
    Subspace n, l; // Hom(N/(N^L), L/(N^L)) != 0
};

struct StephensonReport {
    bool distributive = false;
    std::optional<StephensonWitness> witness;
    std::size_t pairs_checked = 0;
};

struct DistributivityVerdict {
    Verdict verdict = Verdict::unknown;
    std::optional<StephensonWitness> stephenson_witness;
    std::optional<TripleWitness> triple_witness;
    std::vector<std::string> methods; // which routes produced the verdict
    std::vector<std::string> notes;
};

struct ChainVerdict {
    Verdict verdict = Verdict::unknown;
    std::vector<std::size_t> loewy_dims;
    std::vector<std::string> notes;
};

struct QuiverReport {
    std::vector<Subspace> vertices;                        // simple subcoalgebras, sorted
    std::vector<std::pair<std::size_t, std::size_t>> arrows; // (from, to), loops allowed
    std::vector<std::vector<std::size_t>> components;      // vertex partition
    bool only_loops_and_isolated() const;
};

struct SimpleSplit {
    Verdict status = Verdict::unknown; // yes = decisive split, unknown = cap blocked
    std::vector<Subspace> simples;     // simple subcoalgebras of the coradical
    std::vector<std::string> notes;
};

struct AnnihilatorReport {
    bool ok = false;
    std::size_t members = 0;
    std::size_t pairs_checked = 0;
    bool injective = false;
    std::vector<std::string> violations;
};

struct BlockDecomposition {
    std::vector<Subspace> blocks;
    std::vector<std::vector<std::size_t>> component_simples; // indices into the quiver vertices
    std::vector<std::string> notes;
};

struct DualChainReport {
    bool ok = false;
    bool local = false;
    Vec generator;
    bool powers_match = false;      // J^i = A t^i for all i
    bool perp_match = false;        // {C_n}^perp = J^(n+1) for all n
    std::size_t samples_decomposed = 0;
    std::size_t samples_requested = 0;
    std::vector<std::string> notes;
};

struct ProductChainReport {
    bool ok = false;
    std::size_t lattice_size = 0;
    std::optional<TripleWitness> witness;
    std::vector<std::string> notes;
};

struct AutomorphismRecovery {
    AlgebraAutomorphism automorphism;
    Matrix chart; // the left-module isomorphism f : M -> D actually used
};

// --- lattice oracles ---------------------------------------------------------

LatticeSnapshot enumerate_subcomodules(const Comodule& m, std::size_t budget = default_enumeration_budget);
LatticeSnapshot enumerate_left_ideals(const Algebra& a, std::size_t budget = default_enumeration_budget);
LatticeProperties lattice_properties(const LatticeSnapshot& l);

StephensonReport stephenson_check(const Comodule& m, std::size_t budget = default_enumeration_budget);

// --- structural analyses --------------------------------------------------------

ChainVerdict is_chain_coalgebra(const Coalgebra& c, std::size_t budget = default_enumeration_budget,
                                int degree_cap = 12);

DistributivityVerdict is_distributive_coalgebra(const Coalgebra& c,
                                                std::size_t budget = default_enumeration_budget,
                                                int degree_cap = 12);

AnnihilatorReport annihilator_check(const Coalgebra& c, std::size_t budget = default_enumeration_budget);

SimpleSplit simple_subcoalgebra_split(const Coalgebra& c, std::size_t budget = default_enumeration_budget,
                                      int degree_cap = 12);

QuiverReport ext_quiver(const Coalgebra& c, std::size_t budget = default_enumeration_budget,
                        int degree_cap = 12);

BlockDecomposition block_decomposition(const Coalgebra& c, std::size_t budget = default_enumeration_budget,
                                       int degree_cap = 12);

// Convolution dual of the coradical, lazily division-certified.
Algebra chain_type(const Coalgebra& c, std::size_t budget = default_enumeration_budget,
                   int degree_cap = 12);

DualChainReport dual_chain_analysis(const Coalgebra& c, std::size_t budget = default_enumeration_budget,
                                    int degree_cap = 12, std::size_t samples = 100,
                                    std::uint64_t seed = 0x5eed);

// Recovers alpha with M ~ D_alpha from a left-module chart f (found by
// solving the intertwiner system when absent).
AutomorphismRecovery bimodule_to_automorphism(const Bimodule& m, const std::optional<Matrix>& f = {});

ProductChainReport product_chain_ring_check(const std::vector<Algebra>& parts,
                                            std::size_t budget = default_enumeration_budget,
                                            int degree_cap = 12);

} // namespace coalglab

#endif
