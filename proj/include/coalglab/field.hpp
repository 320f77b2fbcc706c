#ifndef COALGLAB_FIELD_HPP
#define COALGLAB_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "coalglab/error.hpp"

namespace coalglab {

// Base field descriptor. All scalars entering one computation must carry
// the same descriptor; mixing descriptors throws field_mismatch.
struct Field {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0; // characteristic: 0 for Q, the prime for GF(p)

    static Field rationals() { return Field{}; }
    static Field gf(std::uint32_t p);

    bool is_rational() const { return kind == Kind::rationals; }
    std::uint32_t characteristic() const { return p; }

    bool operator==(const Field&) const = default;

    std::string to_string() const;
};

// Exact field element: a reduced fraction of big integers over Q, or a
// residue in [0, p) over GF(p).
class Scalar {
  public:
    Scalar() : f_(Field::rationals()) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long v);
    static Scalar of_fraction(const Field& f, long num, long den);
    static Scalar of_mpq(mpq_class q);

    const Field& field() const { return f_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws on division by zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const; // e >= 0, or any e for invertible base

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for canonical sorting of reports; over GF(p)
    // compares residues, over Q compares as rationals.
    bool operator<(const Scalar& o) const;

    // Rational payload (valid over Q only). Lvalue-only: calling this on a
    // temporary would hand out a dangling reference.
    const mpq_class& rational() const&;
    const mpq_class& rational() const&& = delete;
    // Residue payload (valid over GF(p) only).
    std::uint64_t residue() const;

    // "3/4", "-2", "3 mod 5" -- the serialization used in JSON reports.
    std::string to_string() const;
    static Scalar parse(const Field& f, const std::string& text);

  private:
    void check_same(const Scalar& o) const;

    Field f_;
    mpq_class q_;        // valid when f_.is_rational()
    std::uint64_t r_ = 0; // valid when f_ is GF(p)
};

} // namespace coalglab

#endif
