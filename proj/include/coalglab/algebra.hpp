#ifndef COALGLAB_ALGEBRA_HPP
#define COALGLAB_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "coalglab/poly.hpp"
#include "coalglab/subspace.hpp"
#include "coalglab/tensor.hpp"

namespace coalglab {

// Homogeneous index blocks, degree 0 first. Carried by graded constructions
// so that graded isomorphism lifting never has to infer a grading.
using Grading = std::vector<std::vector<std::size_t>>;

// Finite-dimensional associative unital algebra by structure constants:
// e_i * e_j = sum_k mult[i][j][k] e_k.
struct Algebra {
    Field field;
    std::size_t dim = 0;
    Tensor3 mult;
    Vec unit;
    std::optional<Grading> grading;

    Vec multiply(const Vec& a, const Vec& b) const;
    Matrix left_mult(const Vec& a) const;  // L_a, columns are a * e_j
    Matrix right_mult(const Vec& a) const; // R_a, columns are e_i * a
    Vec basis_vector(std::size_t i) const;
    Vec power(const Vec& a, std::size_t n) const;
};

struct AlgebraAutomorphism {
    Matrix matrix; // theta(e_j) read off column j
};

// D-bimodule by structure constants: e_i |> m_a = sum_b left[i][a][b] m_b,
// m_a <| e_i = sum_b right[a][i][b] m_b.
struct Bimodule {
    Algebra base;
    std::size_t dim = 0;
    Tensor3 left;
    Tensor3 right;
};

struct Diagnostics {
    bool valid = true;
    std::vector<std::string> violations;
    void fail(std::string what) {
        valid = false;
        violations.push_back(std::move(what));
    }
};

struct ChainRingCertificate {
    bool is_chain = false;
    std::vector<Subspace> radical_powers; // J^0 = A, J, J^2, ..., 0
    std::optional<Vec> generator;         // t with J^i = A t^i
    std::vector<std::string> notes;
};

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

struct DivisionCertificate {
    Verdict verdict = Verdict::unknown;
    std::string detail;
};

// --- axioms and elementwise operations ---------------------------------

Diagnostics verify_algebra(const Algebra& a);
std::optional<Vec> element_inverse(const Algebra& a, const Vec& x);

// Unit preservation and multiplicativity of a linear map A -> B on all
// basis pairs; iso additionally requires invertibility.
Diagnostics verify_algebra_morphism(const Algebra& a, const Algebra& b, const Matrix& theta);
Diagnostics verify_automorphism(const Algebra& d, const Matrix& theta);

// --- radical, center, quotients ------------------------------------------

// Dickson trace-form radical; valid in characteristic 0 or p > dim, else
// throws small_characteristic.
Subspace jacobson_radical(const Algebra& a);

// Radical by brute-force enumeration of maximal left ideals over GF(p).
Subspace radical_by_enumeration(const Algebra& a, std::size_t budget);

// Router: Dickson when the characteristic allows it, otherwise enumeration.
Subspace radical_subspace(const Algebra& a, std::size_t budget);

Subspace center(const Algebra& a);

// Span of all products u*v with u in U, v in V.
Subspace ideal_product(const Algebra& a, const Subspace& u, const Subspace& v);
bool is_left_ideal(const Algebra& a, const Subspace& s);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);

struct QuotientAlgebra {
    Algebra algebra;
    QuotientChart chart; // projection/section between A and A/I coordinates
};

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& two_sided_ideal);

// Algebra structure on a subspace that is closed under multiplication and
// contains the unit (coordinates in the subspace basis).
Algebra subalgebra_on(const Algebra& a, const Subspace& s);

// Algebra spanned by matrices (closed under product, containing identity);
// used for endomorphism algebras of comodules.
Algebra algebra_from_matrix_span(const std::vector<Matrix>& basis);

// --- division-algebra certification (lazy, per design) --------------------

// Accepts after: radical vanishes, no idempotent is found by minimal
// polynomial splitting over the center (primitive element search), and no
// probed element (basis vectors, pairwise sums/differences) is a nonzero
// zero-divisor. Over GF(p) within budget the answer is made decisive by
// exhausting the algebra. A "no" is always backed by a witness. With
// lazy=false the inconclusive branch reports unknown instead of accepting;
// simplicity tests use that mode so they can never report a wrong "yes".
DivisionCertificate certify_division_algebra(const Algebra& a, std::size_t budget, int degree_cap = 12,
                                             bool lazy = true);

// Field test for a commutative algebra; decisive over GF(p) within budget
// and over Q up to the factorization cap.
Verdict commutative_algebra_is_field(const Algebra& a, std::size_t budget, int degree_cap = 12);

// --- chain rings -----------------------------------------------------------

ChainRingCertificate is_left_chain_ring(const Algebra& a, std::size_t budget, int degree_cap = 12);

// --- constructions ----------------------------------------------------------

// D<x; alpha> / (x^(N+1)) on the degree-major basis e_s x^i with
// (e_s x^i)(e_t x^j) = e_s alpha^i(e_t) x^(i+j). Emits the degree grading.
Algebra skew_polynomial_quotient(const Algebra& d, const AlgebraAutomorphism& alpha, std::size_t n);

// D ∝ V with (a,x)(b,y) = (ab, phi(a)y + x sigma(b)), V = D as a space.
Algebra trivial_extension(const Algebra& d, const AlgebraAutomorphism& phi, const AlgebraAutomorphism& sigma);

Algebra direct_product_algebra(const std::vector<Algebra>& parts);

Bimodule bimodule_from_automorphism(const Algebra& d, const AlgebraAutomorphism& alpha);
Diagnostics verify_bimodule(const Bimodule& m);

// --- GF(p) brute force -------------------------------------------------------

// All subspaces invariant under the given matrices, i.e. all submodules for
// the generated algebra: cyclic closures of every vector, then sum closure.
// Requires p^n <= budget.
std::vector<Subspace> enumerate_invariant_subspaces(const std::vector<Matrix>& generators,
                                                    std::size_t n, const Field& f,
                                                    std::size_t budget);

std::vector<Subspace> enumerate_left_ideal_subspaces(const Algebra& a, std::size_t budget);

inline constexpr std::size_t default_enumeration_budget = std::size_t{1} << 20;

} // namespace coalglab

#endif
