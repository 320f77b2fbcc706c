#ifndef COALGLAB_CONSTRUCTORS_HPP
#define COALGLAB_CONSTRUCTORS_HPP

#include "coalglab/coalgebra.hpp"

namespace coalglab {

// --- standard coefficient algebras ------------------------------------------

// The base field as a one-dimensional algebra.
Algebra ground_field_algebra(const Field& f);
// k[i]/(i^2+1) on basis {1, i}; a division algebra over Q and over GF(p)
// with p = 3 mod 4.
Algebra gaussian_algebra(const Field& f);
// Quaternions on {1, i, j, k} with i^2 = j^2 = -1, ij = k = -ji.
Algebra quaternion_algebra(const Field& f);
// k[x]/(x^(n+1)) on {1, x, ..., x^n}.
Algebra truncated_polynomial_algebra(const Field& f, std::size_t n);

AlgebraAutomorphism identity_automorphism(const Algebra& d);
// 1 -> 1, i -> -i on gaussian_algebra-shaped bases.
AlgebraAutomorphism conjugation_automorphism(const Algebra& d);

// --- quivers -----------------------------------------------------------------

struct QuiverArrow {
    std::size_t source = 0;
    std::size_t target = 0;
};

struct QuiverPresentation {
    std::size_t vertex_count = 0;
    std::vector<QuiverArrow> arrows;
    // optional coalgebra attached per vertex (all or none)
    std::vector<Coalgebra> attached;
};

QuiverPresentation loop_quiver();
QuiverPresentation a2_quiver(); // u -> v

// --- named constructions ------------------------------------------------------

struct CoproductResult {
    Coalgebra coalgebra;
    std::vector<Matrix> embeddings; // dim(C) x dim(part)
};

// Divided power coalgebra DC_n: Delta(c_n) = sum c_i (x) c_{n-i}.
Coalgebra divided_power(const Field& f, std::size_t n);

CoproductResult coproduct(const std::vector<Coalgebra>& parts);

// Componentwise comultiplication on c (x) e, lexicographic basis.
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& e);

// Graded coalgebra on e_{k n}, 0 <= n <= N, with
// Delta(e_{kn}) = sum_{i+j=n} sum_{s,t} e_k^*(e_s alpha^i(e_t)) e_{si} (x) e_{tj};
// degree-major basis, bit-equal to dual_coalgebra(skew_polynomial_quotient).
Coalgebra graded_series_coalgebra(const Algebra& d, const AlgebraAutomorphism& alpha, std::size_t n,
                                  std::size_t budget = default_enumeration_budget);

// Dual of a D-bimodule as a D*-bicomodule (coactions are the transposed actions).
BicomoduleData dual_bicomodule(const Bimodule& m);

// Truncated cotensor coalgebra T_{C0}(M) in degrees <= N; degree-n component
// is the joint kernel of the cotensor conditions inside M^(x n).
Coalgebra cotensor_truncated(const Coalgebra& c0, const BicomoduleData& m, std::size_t n,
                             std::size_t budget = default_enumeration_budget);

// Path coalgebra of a bare quiver truncated at path length N.
Coalgebra truncated_path_coalgebra(const QuiverPresentation& q, std::size_t n,
                                   const Field& f = Field::rationals());

// Generalized path coalgebra k(Q, {C_v}) truncated at length N; the basis is
// the product of vertex-coalgebra bases along each quiver path. The field
// argument is used only when no vertex coalgebras are attached.
Coalgebra generalized_path_coalgebra(const QuiverPresentation& q, std::size_t n,
                                     const Field& f = Field::rationals());

// Hard-coded literal tables over Q with Q(i) given by structure constants.
Coalgebra golden_ex61(std::size_t n);
Coalgebra golden_ex63();
Coalgebra golden_ex64(std::size_t n);

// Direct sum of comodules over one coalgebra.
Comodule direct_sum_comodule(const std::vector<Comodule>& parts);

} // namespace coalglab

#endif
