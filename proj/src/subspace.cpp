#include "coalglab/subspace.hpp"

#include <sstream>

#include "coalglab/error.hpp"

namespace coalglab {

namespace {

Matrix drop_zero_rows(Matrix m) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!vec_is_zero(m.row(i))) keep.push_back(i);
    if (keep.size() == m.rows()) return m;
    return m.take_rows(keep);
}

} // namespace

Subspace::Subspace(std::size_t ambient, Matrix m) : ambient_(ambient), basis_(std::move(m)) {
    if (basis_.cols() != ambient_)
        throw dimension_mismatch("Subspace: basis width != ambient dimension");
    rref_in_place(basis_);
    basis_ = drop_zero_rows(std::move(basis_));
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
    return Subspace(ambient, Matrix(f, 0, ambient));
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
    return Subspace(ambient, Matrix::identity(f, ambient));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors, const Field& f) {
    if (vectors.empty()) return zero(f, ambient);
    return Subspace(ambient, Matrix::from_rows(f, vectors));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw dimension_mismatch("Subspace::contains: length mismatch");
    // Reduce v against the RREF rows; v is in the span iff the residue is 0.
    Vec r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // pivot of row i = first nonzero column
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        if (p == ambient_) continue;
        if (!r[p].is_zero()) {
            Scalar c = r[p];
            for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
        }
    }
    return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw dimension_mismatch("Subspace::contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Vec Subspace::coordinates_of(const Vec& v) const {
    auto sol = solve_linear(basis_.transpose(), v);
    if (!sol.consistent) throw coalg_error("coordinates_of: vector outside subspace");
    return sol.particular;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) {
            const Scalar &a = basis_.at(i, j), &b = o.basis_.at(i, j);
            if (a != b) return a < b;
        }
    return false;
}

std::string Subspace::key() const {
    std::ostringstream os;
    os << ambient_ << ";" << dim() << ";";
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) os << basis_.at(i, j).to_string() << ",";
    return os.str();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw dimension_mismatch("subspace_sum: ambient mismatch");
    return Subspace(u.ambient_dim(), u.basis().stacked(v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw dimension_mismatch("subspace_intersect: ambient mismatch");
    const Field f = u.field();
    const std::size_t n = u.ambient_dim();
    // Zassenhaus block trick: reduce [U | U; V | 0]; rows with zero left half
    // carry an intersection basis in the right half.
    Matrix block(f, u.dim() + v.dim(), 2 * n);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = u.basis().at(i, j);
            block.at(i, n + j) = u.basis().at(i, j);
        }
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) block.at(u.dim() + i, j) = v.basis().at(i, j);
    rref_in_place(block);

    std::vector<Vec> rows;
    for (std::size_t i = 0; i < block.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (!block.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec right(n, Scalar::zero(f));
        for (std::size_t j = 0; j < n; ++j) right[j] = block.at(i, n + j);
        if (!vec_is_zero(right)) rows.push_back(std::move(right));
    }
    return Subspace::span(n, rows, f);
}

Subspace preimage(const Matrix& l, const Subspace& w) {
    if (w.ambient_dim() != l.rows()) throw dimension_mismatch("preimage: codomain mismatch");
    if (w.dim() == l.rows()) return Subspace::full(l.field(), l.cols());
    // v maps into W iff the quotient projection of Lv vanishes.
    QuotientChart chart = quotient_chart(w);
    return kernel_subspace(chart.projection * l);
}

Subspace image(const Matrix& l) {
    return Subspace(l.rows(), l.transpose());
}

Subspace kernel_subspace(const Matrix& l) {
    return Subspace(l.cols(), kernel(l));
}

Subspace tensor_subspace(const Subspace& u, const Subspace& w) {
    Matrix b = kronecker(u.basis(), w.basis());
    return Subspace(u.ambient_dim() * w.ambient_dim(), std::move(b));
}

QuotientChart quotient_chart(const Subspace& w) {
    const Field f = w.field();
    const std::size_t n = w.ambient_dim();
    const std::size_t k = w.dim();

    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t p = 0;
        while (p < n && w.basis().at(i, p).is_zero()) ++p;
        pivots.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    QuotientChart chart;
    chart.projection = Matrix(f, n - k, n);
    for (std::size_t a = 0; a < free_cols.size(); ++a) {
        // image of e_j after eliminating the pivot coordinates of W
        chart.projection.at(a, free_cols[a]) = Scalar::one(f);
        for (std::size_t i = 0; i < k; ++i)
            chart.projection.at(a, pivots[i]) = -w.basis().at(i, free_cols[a]);
    }
    chart.section = Matrix(f, n, n - k);
    for (std::size_t a = 0; a < free_cols.size(); ++a)
        chart.section.at(free_cols[a], a) = Scalar::one(f);
    return chart;
}

} // namespace coalglab
