#ifndef COALGLAB_MATRIX_HPP
#define COALGLAB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "coalglab/field.hpp"

namespace coalglab {

using Vec = std::vector<Scalar>;

Vec vec_zero(const Field& f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Dense row-major matrix over one field. A 0xN or Nx0 matrix is legal and
// shows up routinely as an empty basis.
class Matrix {
  public:
    Matrix() : f_(Field::rationals()) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    // Rows given as integer literals, mapped into the field.
    static Matrix from_int_rows(const Field& f, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    Vec apply(const Vec& v) const;          // A v, v a column of length cols()
    Vec apply_transposed(const Vec& v) const; // A^T v

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    // Stacks o below this matrix; column counts must agree.
    Matrix stacked(const Matrix& o) const;
    // This matrix and o side by side; row counts must agree.
    Matrix augmented(const Matrix& o) const;
    Matrix submatrix_cols(std::size_t from, std::size_t to) const; // [from, to)
    Matrix take_rows(const std::vector<std::size_t>& idx) const;

    std::string to_string() const;

  private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

// Matrix of L1 (x) L2 in the lexicographic tensor basis with the LEFT factor
// major: e_i (x) e_j has index i * dim_right + j. This order is fixed
// project-wide; structure-constant tensors are only comparable under it.
Matrix kronecker(const Matrix& l1, const Matrix& l2);

Vec kron_vec(const Vec& u, const Vec& v);

// In-place reduced row echelon form. Returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
bool invertible(const Matrix& m);
Matrix inverse(const Matrix& m); // throws if singular

struct LinearSolution {
    bool consistent = false;
    Vec particular;        // one solution when consistent
    Matrix kernel_basis;   // rows span the kernel (RREF)
};

// Solve A x = b exactly; kernel basis is always computed.
LinearSolution solve_linear(const Matrix& a, const Vec& b);

// Rows span the kernel of a (RREF, canonical).
Matrix kernel(const Matrix& a);

} // namespace coalglab

#endif
