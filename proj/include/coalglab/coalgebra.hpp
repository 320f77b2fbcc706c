#ifndef COALGLAB_COALGEBRA_HPP
#define COALGLAB_COALGEBRA_HPP

#include <optional>

#include "coalglab/algebra.hpp"

namespace coalglab {

// Coalgebra by structure constants: Delta(e_k) = sum_{i,j} comult[k][i][j]
// e_i (x) e_j, counit the row eps. The tensor basis is always lexicographic
// with the left factor major.
struct Coalgebra {
    Field field;
    std::size_t dim = 0;
    Tensor3 comult; // d[k][i][j]
    Vec counit;
    std::optional<Grading> grading;

    Vec basis_vector(std::size_t i) const;
    // (dim^2) x dim matrix of Delta, row index i*dim + j.
    Matrix delta_matrix() const;
    Scalar counit_of(const Vec& c) const;
};

// Right C-comodule: delta(m_a) = sum coaction[a][b][k] m_b (x) c_k.
struct Comodule {
    Coalgebra coalgebra;
    std::size_t dim = 0;
    Tensor3 coaction;

    Matrix delta_matrix() const; // (dim * dim C) x dim
};

// C-bicomodule: rho_l(m_a) = sum left[a][k][b] c_k (x) m_b and
// rho_r(m_a) = sum right[a][b][k] m_b (x) c_k.
struct BicomoduleData {
    Coalgebra coalgebra;
    std::size_t dim = 0;
    Tensor3 left;
    Tensor3 right;
};

struct CoalgebraMap {
    Coalgebra source;
    Coalgebra target;
    Matrix matrix; // dim(target) x dim(source)
};

struct MorphismReport {
    bool ok = false;
    bool iso = false;
    std::vector<std::string> violations;
};

// Ascending, strictly increasing, ending at the full space.
struct Filtration {
    std::vector<Subspace> terms;
    std::vector<std::size_t> dims() const;
};

// --- axioms -----------------------------------------------------------------

Diagnostics verify_coalgebra(const Coalgebra& c);
Diagnostics verify_comodule(const Comodule& m);
Diagnostics verify_bicomodule(const BicomoduleData& b);

// --- duality ----------------------------------------------------------------

Algebra convolution_dual(const Coalgebra& c); // m[i][j][k] = d[k][i][j]
Coalgebra dual_coalgebra(const Algebra& a);   // d[k][i][j] = m[i][j][k]

// --- hit actions -------------------------------------------------------------

// f -> c = (id (x) f) Delta(c): f evaluates the right tensor leg.
Vec hit_left(const Coalgebra& c, const Vec& f, const Vec& x);
// c <- f = (f (x) id) Delta(c): f evaluates the left tensor leg.
Vec hit_right(const Coalgebra& c, const Vec& x, const Vec& f);

// Matrix of m |-> f -> m on a comodule.
Matrix hit_action_matrix(const Comodule& m, const Vec& f);
// Matrix of c |-> c <- f on the coalgebra itself.
Matrix right_hit_matrix(const Coalgebra& c, const Vec& f);

// {m : f -> m = 0 for all f in S}, S a subspace of dual coordinates.
Subspace annihilated_by(const Comodule& m, const Subspace& s);

// Ann(N) = {f in C* : N <- f = 0}, a kernel computation.
Subspace annihilator_of_coideal(const Coalgebra& c, const Subspace& n);
// N^perp = {f : f(N) = 0}.
Subspace perp(const Subspace& n);

// --- comodules ----------------------------------------------------------------

Comodule regular_comodule(const Coalgebra& c);
Coalgebra co_opposite(const Coalgebra& c);
bool is_cocommutative(const Coalgebra& c);

struct SubComodule {
    Comodule comodule;
    Matrix inclusion; // ambient dim x sub dim
};
struct QuotientComodule {
    Comodule comodule;
    QuotientChart chart;
};

bool is_subcomodule(const Comodule& m, const Subspace& u);
SubComodule sub_comodule(const Comodule& m, const Subspace& u);
QuotientComodule quotient_comodule(const Comodule& m, const Subspace& u);

Subspace comodule_socle(const Comodule& m, std::size_t budget = default_enumeration_budget);
Filtration loewy_filtration(const Comodule& m, std::size_t budget = default_enumeration_budget);

// Basis of {T : delta_N T = (T (x) id) delta_M}; canonical RREF order.
std::vector<Matrix> hom_space(const Comodule& m, const Comodule& n);

struct SimplicityReport {
    Verdict verdict = Verdict::unknown;
    std::string detail;
};

SimplicityReport is_simple_comodule(const Comodule& m, std::size_t budget = default_enumeration_budget,
                                    int degree_cap = 12);

std::vector<Subspace> enumerate_subcomodule_subspaces(const Comodule& m, std::size_t budget);

// --- wedge and filtrations ----------------------------------------------------

// X ^ Y = Delta^{-1}(X (x) C + C (x) Y).
Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y);

// Computed by radical-power annihilators and by iterated wedge; the two
// chains must agree (method_disagreement otherwise).
Filtration coradical_filtration(const Coalgebra& c, std::size_t budget = default_enumeration_budget);

// --- subcoalgebras and morphisms ------------------------------------------------

bool is_subcoalgebra(const Coalgebra& c, const Subspace& u);

struct SubCoalgebra {
    Coalgebra coalgebra;
    Matrix inclusion; // ambient x sub
    Subspace subspace;
};

SubCoalgebra sub_coalgebra(const Coalgebra& c, const Subspace& u);

MorphismReport verify_morphism(const CoalgebraMap& map);

// Extends each degree-0 seed iso block by block, solving the affine-linear
// system the morphism identity imposes on the new degree; returns the first
// assembled map that passes verify_morphism and is invertible.
std::optional<CoalgebraMap> graded_iso_lift(const Coalgebra& c, const Coalgebra& d,
                                            const std::vector<Matrix>& seeds);

} // namespace coalglab

#endif
