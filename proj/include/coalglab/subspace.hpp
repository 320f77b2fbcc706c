#ifndef COALGLAB_SUBSPACE_HPP
#define COALGLAB_SUBSPACE_HPP

#include <string>
#include <vector>

#include "coalglab/matrix.hpp"

namespace coalglab {

// Subspace of k^n held as its unique reduced row-echelon basis with zero
// rows removed. Two subspaces are equal iff their basis matrices are equal,
// which makes Subspace usable as a canonical dictionary key.
class Subspace {
  public:
    Subspace() = default;
    // Span of the rows of m inside k^ambient.
    Subspace(std::size_t ambient, Matrix m);

    static Subspace zero(const Field& f, std::size_t ambient);
    static Subspace full(const Field& f, std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors, const Field& f);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in this basis; throws if v is outside the span.
    Vec coordinates_of(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    // Lexicographic on (ambient, dim, basis entries); canonical report order.
    bool operator<(const Subspace& o) const;

    std::string key() const; // serialized basis, usable as a set key

  private:
    std::size_t ambient_ = 0;
    Matrix basis_; // RREF, no zero rows, cols == ambient_
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// {v : Lv in W} for L : k^cols -> k^rows, W a subspace of the codomain.
Subspace preimage(const Matrix& l, const Subspace& w);

Subspace image(const Matrix& l);
Subspace kernel_subspace(const Matrix& l);

// Tensor product U (x) W inside k^(n*m), left factor major.
Subspace tensor_subspace(const Subspace& u, const Subspace& w);

// Coordinate chart for the quotient k^n / W. projection has a full row rank
// (n - dim W) x n matrix whose kernel is exactly W; section is a right
// inverse picking the canonical coset representatives supported on the
// non-pivot columns of W's basis.
struct QuotientChart {
    Matrix projection; // (n - w) x n
    Matrix section;    // n x (n - w)
};

QuotientChart quotient_chart(const Subspace& w);

} // namespace coalglab

#endif
