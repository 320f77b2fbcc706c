#include "coalglab/matrix.hpp"

#include <sstream>

#include "coalglab/error.hpp"

namespace coalglab {

Vec vec_zero(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vec_add: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vec_sub: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_int_rows(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw dimension_mismatch("from_int_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Scalar::of_int(f, v);
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw dimension_mismatch("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw dimension_mismatch("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix add: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix sub: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dimension_mismatch("matrix mul: inner dimensions differ");
    Matrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw dimension_mismatch("Matrix::apply: length mismatch");
    Vec r = vec_zero(f_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Vec Matrix::apply_transposed(const Vec& v) const {
    if (v.size() != rows_) throw dimension_mismatch("Matrix::apply_transposed: length mismatch");
    Vec r = vec_zero(f_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[j] += v[i] * at(i, j);
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::stacked(const Matrix& o) const {
    if (o.rows_ == 0) return *this;
    if (rows_ == 0) return o;
    if (cols_ != o.cols_) throw dimension_mismatch("stacked: column counts differ");
    Matrix r(f_, rows_ + o.rows_, cols_);
    r.e_ = e_;
    r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
    return r;
}

Matrix Matrix::augmented(const Matrix& o) const {
    if (rows_ != o.rows_) throw dimension_mismatch("augmented: row counts differ");
    Matrix r(f_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::submatrix_cols(std::size_t from, std::size_t to) const {
    Matrix r(f_, rows_, to - from);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
    return r;
}

Matrix Matrix::take_rows(const std::vector<std::size_t>& idx) const {
    Matrix r(f_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]\n";
    }
    return os.str();
}

Matrix kronecker(const Matrix& l1, const Matrix& l2) {
    if (!(l1.field() == l2.field())) throw field_mismatch("kronecker: fields differ");
    Matrix r(l1.field(), l1.rows() * l2.rows(), l1.cols() * l2.cols());
    for (std::size_t i = 0; i < l1.rows(); ++i)
        for (std::size_t j = 0; j < l1.cols(); ++j) {
            const Scalar& a = l1.at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t s = 0; s < l2.rows(); ++s)
                for (std::size_t t = 0; t < l2.cols(); ++t) {
                    const Scalar& b = l2.at(s, t);
                    if (!b.is_zero()) r.at(i * l2.rows() + s, j * l2.cols() + t) = a * b;
                }
        }
    return r;
}

Vec kron_vec(const Vec& u, const Vec& v) {
    Vec r;
    r.reserve(u.size() * v.size());
    for (const auto& a : u)
        for (const auto& b : v) r.push_back(a * b);
    return r;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("determinant: not square");
    const Field f = m.field();
    Scalar det = Scalar::one(f);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == n) return Scalar::zero(f);
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= factor * m.at(c, j);
        }
    }
    return det;
}

bool invertible(const Matrix& m) {
    return m.rows() == m.cols() && !determinant(m).is_zero();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("inverse: not square");
    std::size_t n = m.rows();
    Matrix aug = m.augmented(Matrix::identity(m.field(), n));
    auto pivots = rref_in_place(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw coalg_error("inverse: matrix is singular");
    return aug.submatrix_cols(n, 2 * n);
}

LinearSolution solve_linear(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw dimension_mismatch("solve_linear: rhs length mismatch");
    const Field f = a.field();
    std::size_t n = a.cols();
    Matrix rhs(f, a.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    Matrix aug = a.augmented(rhs);
    auto pivots = rref_in_place(aug);

    LinearSolution sol;
    sol.consistent = true;
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == n) sol.consistent = false; // pivot in the rhs column

    sol.kernel_basis = kernel(a);
    if (!sol.consistent) return sol;

    sol.particular = vec_zero(f, n);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] < n) sol.particular[pivots[k]] = aug.at(k, n);
    return sol;
}

Matrix kernel(const Matrix& a) {
    const Field f = a.field();
    std::size_t n = a.cols();
    Matrix m = a;
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(f, n);
        v[c] = Scalar::one(f);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, c);
        basis.push_back(std::move(v));
    }
    Matrix kb = Matrix::from_rows(f, basis);
    if (kb.rows() == 0) kb = Matrix(f, 0, n);
    rref_in_place(kb);
    return kb;
}

} // namespace coalglab
