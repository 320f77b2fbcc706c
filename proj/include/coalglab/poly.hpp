#ifndef COALGLAB_POLY_HPP
#define COALGLAB_POLY_HPP

#include <utility>
#include <vector>

#include "coalglab/matrix.hpp"

namespace coalglab {

// Univariate polynomial, coefficients lowest degree first, trailing zeros
// trimmed; the zero polynomial has an empty coefficient list.
class Polynomial {
  public:
    explicit Polynomial(const Field& f) : f_(f) {}
    Polynomial(const Field& f, std::vector<Scalar> coeffs);

    static Polynomial zero(const Field& f) { return Polynomial(f); }
    static Polynomial constant(const Scalar& c);
    static Polynomial x(const Field& f);
    static Polynomial monomial(const Field& f, std::size_t degree, const Scalar& c);
    static Polynomial from_ints(const Field& f, const std::vector<long>& coeffs);

    const Field& field() const { return f_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    Scalar leading() const;
    Scalar coeff(std::size_t i) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    bool operator==(const Polynomial& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial monic() const;
    Polynomial derivative() const;

    Scalar eval(const Scalar& x) const;
    Matrix eval_matrix(const Matrix& m) const;

    std::string to_string() const; // for diagnostics

  private:
    Field f_;
    std::vector<Scalar> c_;
    void trim();
};

Polynomial poly_gcd(Polynomial a, Polynomial b); // monic gcd
Polynomial poly_powmod(const Polynomial& base, const mpz_class& e, const Polynomial& mod);

// Monic polynomial of least degree annihilating the square matrix.
Polynomial minimal_polynomial(const Matrix& l);

struct Factorization {
    Scalar unit;                                      // leading unit
    std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, multiplicity
    // unit * prod factor^mult == input, exactly.
};

// Complete over GF(p) for any degree; over Q up to degree_cap (throws
// degree_cap_exceeded above it, and callers degrade to verify-only mode).
Factorization factor_univariate(const Polynomial& p, int degree_cap = 12);

// Convenience: true iff p is irreducible over its field (degree >= 1).
bool is_irreducible(const Polynomial& p, int degree_cap = 12);

} // namespace coalglab

#endif
