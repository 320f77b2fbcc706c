#include "coalglab/field.hpp"

#include <cstdlib>

namespace coalglab {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_reduce(long v, std::uint32_t p) {
    long m = v % static_cast<long>(p);
    if (m < 0) m += p;
    return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
    // extended Euclid on (a, p); a in [1, p)
    long long t = 0, nt = 1;
    long long r = p, nr = static_cast<long long>(a);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw coalg_error("mod_inverse: not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::gf(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw invalid_structure("Field::gf: characteristic must be prime, got " + std::to_string(p));
    Field f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : ("GF(" + std::to_string(p) + ")");
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.f_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long v) {
    Scalar s;
    s.f_ = f;
    if (f.is_rational())
        s.q_ = mpq_class(v);
    else
        s.r_ = mod_reduce(v, f.p);
    return s;
}

Scalar Scalar::of_fraction(const Field& f, long num, long den) {
    if (den == 0) throw coalg_error("Scalar: zero denominator");
    Scalar s;
    s.f_ = f;
    if (f.is_rational()) {
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
    } else {
        std::uint64_t d = mod_reduce(den, f.p);
        if (d == 0) throw coalg_error("Scalar: denominator is zero in GF(p)");
        s.r_ = mod_reduce(num, f.p) * mod_inverse(d, f.p) % f.p;
    }
    return s;
}

Scalar Scalar::of_mpq(mpq_class q) {
    Scalar s;
    s.q_ = std::move(q);
    s.q_.canonicalize();
    return s;
}

bool Scalar::is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
    if (!(f_ == o.f_))
        throw field_mismatch("scalar fields differ: " + f_.to_string() + " vs " + o.f_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (f_.is_rational())
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = f_.p - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (f_.is_rational())
        s.q_ += o.q_;
    else
        s.r_ = (r_ + o.r_) % f_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (f_.is_rational())
        s.q_ *= o.q_;
    else
        s.r_ = r_ * o.r_ % f_.p; // p < 2^31 so the product fits in 64 bits
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw coalg_error("Scalar::inverse: division by zero");
    Scalar s = *this;
    if (f_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, f_.p);
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(f_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same(o);
    return f_.is_rational() ? q_ < o.q_ : r_ < o.r_;
}

const mpq_class& Scalar::rational() const& {
    if (!f_.is_rational()) throw coalg_error("Scalar::rational on GF(p) value");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (f_.is_rational()) throw coalg_error("Scalar::residue on rational value");
    return r_;
}

std::string Scalar::to_string() const {
    if (f_.is_rational()) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(f_.p);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (f.is_rational()) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw invalid_structure("cannot parse rational scalar: '" + text + "'");
        q.canonicalize();
        Scalar s;
        s.f_ = f;
        s.q_ = q;
        return s;
    }
    auto pos = text.find(" mod ");
    std::string head = pos == std::string::npos ? text : text.substr(0, pos);
    if (pos != std::string::npos) {
        unsigned long p = std::stoul(text.substr(pos + 5));
        if (p != f.p)
            throw invalid_structure("scalar modulus " + std::to_string(p) + " does not match field " + f.to_string());
    }
    return Scalar::of_int(f, std::stol(head));
}

} // namespace coalglab
