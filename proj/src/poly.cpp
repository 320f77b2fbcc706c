#include "coalglab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "coalglab/error.hpp"

namespace coalglab {

Polynomial::Polynomial(const Field& f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.field() == f_)) throw field_mismatch("Polynomial: coefficient field mismatch");
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
    return Polynomial(c.field(), std::vector<Scalar>{c});
}

Polynomial Polynomial::x(const Field& f) {
    return Polynomial(f, {Scalar::zero(f), Scalar::one(f)});
}

Polynomial Polynomial::monomial(const Field& f, std::size_t degree, const Scalar& c) {
    std::vector<Scalar> v(degree + 1, Scalar::zero(f));
    v[degree] = c;
    return Polynomial(f, std::move(v));
}

Polynomial Polynomial::from_ints(const Field& f, const std::vector<long>& coeffs) {
    std::vector<Scalar> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(Scalar::of_int(f, c));
    return Polynomial(f, std::move(v));
}

Scalar Polynomial::leading() const {
    if (is_zero()) throw coalg_error("leading coefficient of zero polynomial");
    return c_.back();
}

Scalar Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Scalar::zero(f_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Polynomial(f_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> v = c_;
    for (auto& x : v) x = -x;
    return Polynomial(f_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(f_);
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) v[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(f_, std::move(v));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    std::vector<Scalar> v = c_;
    for (auto& x : v) x *= c;
    return Polynomial(f_, std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw coalg_error("polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial(f_), *this};
    std::vector<Scalar> rem = c_;
    std::vector<Scalar> quo(degree() - d.degree() + 1, Scalar::zero(f_));
    Scalar lc_inv = d.leading().inverse();
    for (long k = degree() - d.degree(); k >= 0; --k) {
        Scalar q = rem[k + d.degree()] * lc_inv;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (long j = 0; j <= d.degree(); ++j) rem[k + j] -= q * d.coeff(j);
    }
    return {Polynomial(f_, std::move(quo)), Polynomial(f_, std::move(rem))};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial(f_);
    std::vector<Scalar> v(c_.size() - 1, Scalar::zero(f_));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar::of_int(f_, static_cast<long>(i));
    return Polynomial(f_, std::move(v));
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(f_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Matrix Polynomial::eval_matrix(const Matrix& m) const {
    if (m.rows() != m.cols()) throw dimension_mismatch("eval_matrix: not square");
    Matrix acc(f_, m.rows(), m.rows());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * m;
        if (!c_[i].is_zero()) {
            for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += c_[i];
        }
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].to_string() << ")";
        if (i == 1) os << "*x";
        else if (i > 1) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial poly_powmod(const Polynomial& base, const mpz_class& e, const Polynomial& mod) {
    Polynomial acc = Polynomial::constant(Scalar::one(base.field()));
    acc = acc.divmod(mod).second;
    Polynomial b = base.divmod(mod).second;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * b).divmod(mod).second;
        b = (b * b).divmod(mod).second;
        k >>= 1;
    }
    return acc;
}

Polynomial minimal_polynomial(const Matrix& l) {
    if (l.rows() != l.cols()) throw dimension_mismatch("minimal_polynomial: not square");
    const Field f = l.field();
    const std::size_t n = l.rows();
    if (n == 0) return Polynomial::constant(Scalar::one(f));

    // Flatten successive powers and look for the first linear dependence.
    std::vector<Vec> flat;
    Matrix power = Matrix::identity(f, n);
    for (std::size_t k = 0;; ++k) {
        Vec fl;
        fl.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) fl.push_back(power.at(i, j));
        if (k > 0) {
            Matrix prev = Matrix::from_rows(f, std::vector<Vec>(flat.begin(), flat.end()));
            auto sol = solve_linear(prev.transpose(), fl);
            if (sol.consistent) {
                std::vector<Scalar> coeffs(k + 1, Scalar::zero(f));
                for (std::size_t i = 0; i < k; ++i) coeffs[i] = -sol.particular[i];
                coeffs[k] = Scalar::one(f);
                return Polynomial(f, std::move(coeffs));
            }
        }
        flat.push_back(std::move(fl));
        power = power * l;
        if (k > n) throw coalg_error("minimal_polynomial: no relation found (bug)");
    }
}

// ---------------------------------------------------------------------------
// Factorization over GF(p)
// ---------------------------------------------------------------------------

namespace {

// f with f' == 0 over GF(p) is g(x^p); p-th roots of coefficients in the
// prime field are the coefficients themselves.
Polynomial pth_root_decompress(const Polynomial& f) {
    const Field& k = f.field();
    const std::uint32_t p = k.characteristic();
    std::vector<Scalar> g;
    for (std::size_t i = 0; i * p <= static_cast<std::size_t>(f.degree()); ++i) g.push_back(f.coeff(i * p));
    return Polynomial(k, std::move(g));
}

// Squarefree decomposition of a monic polynomial, valid in characteristic p.
void squarefree_gf(const Polynomial& f, int outer_mult, std::vector<std::pair<Polynomial, int>>& out) {
    const Field& k = f.field();
    const std::uint32_t p = k.characteristic();
    if (f.degree() <= 0) return;
    Polynomial fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_gf(pth_root_decompress(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    Polynomial c = poly_gcd(f, fp);
    Polynomial w = f.divmod(c).first;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = poly_gcd(w, c);
        Polynomial z = w.divmod(y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * outer_mult);
        w = y;
        c = c.divmod(y).first;
        ++i;
    }
    if (c.degree() > 0) squarefree_gf(pth_root_decompress(c), outer_mult * static_cast<int>(p), out);
}

// Deterministic pseudo-random polynomial source for equal-degree splitting.
struct SplitRng {
    std::uint64_t state;
    explicit SplitRng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    Polynomial next_poly(const Field& k, long max_deg) {
        std::vector<Scalar> c;
        for (long i = 0; i <= max_deg; ++i)
            c.push_back(Scalar::of_int(k, static_cast<long>(next() % k.characteristic())));
        return Polynomial(k, std::move(c));
    }
};

void equal_degree_split(const Polynomial& f, long d, SplitRng& rng, std::vector<Polynomial>& out) {
    const Field& k = f.field();
    const std::uint32_t p = k.characteristic();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    Polynomial one = Polynomial::constant(Scalar::one(k));
    for (int attempt = 0; attempt < 256; ++attempt) {
        Polynomial a = rng.next_poly(k, f.degree() - 1);
        if (a.degree() < 1 && attempt < 64) continue;
        Polynomial g = poly_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f.divmod(g).first, d, rng, out);
            return;
        }
        Polynomial b(k);
        if (p == 2) {
            // trace map over GF(2^d)
            Polynomial t = a;
            Polynomial acc = a;
            for (long i = 1; i < d; ++i) {
                t = (t * t).divmod(f).second;
                acc = acc + t;
            }
            b = acc;
        } else {
            mpz_class e = 1;
            for (long i = 0; i < d; ++i) e *= p;
            e = (e - 1) / 2;
            b = poly_powmod(a, e, f) - one;
        }
        Polynomial g2 = poly_gcd(b, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            equal_degree_split(g2, d, rng, out);
            equal_degree_split(f.divmod(g2).first, d, rng, out);
            return;
        }
    }
    throw coalg_error("equal_degree_split: failed to split (bug)");
}

std::uint64_t poly_seed(const Polynomial& f) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& c : f.coeffs()) {
        std::uint64_t v = c.field().is_rational() ? 0 : c.residue();
        h = (h ^ v) * 1099511628211ull;
    }
    h = (h ^ static_cast<std::uint64_t>(f.degree())) * 1099511628211ull;
    return h;
}

std::vector<Polynomial> factor_squarefree_gf(const Polynomial& f) {
    // distinct-degree stage, then equal-degree splitting
    const Field& k = f.field();
    const std::uint32_t p = k.characteristic();
    std::vector<Polynomial> out;
    Polynomial rest = f.monic();
    Polynomial h = Polynomial::x(k);
    SplitRng rng(poly_seed(f));
    for (long d = 1; 2 * d <= rest.degree(); ++d) {
        h = poly_powmod(h, mpz_class(p), rest);
        Polynomial g = poly_gcd(h - Polynomial::x(k), rest);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            rest = rest.divmod(g).first;
            if (rest.degree() > 0) h = h.divmod(rest).second;
        }
    }
    // whatever remains is a single irreducible of degree > half of itself
    if (rest.degree() > 0) out.push_back(rest.monic());
    return out;
}

Factorization factor_gf(const Polynomial& input) {
    Factorization fac;
    fac.unit = input.leading();
    Polynomial f = input.monic();
    std::vector<std::pair<Polynomial, int>> square_parts;
    squarefree_gf(f, 1, square_parts);
    for (const auto& [part, mult] : square_parts) {
        for (const auto& irr : factor_squarefree_gf(part)) fac.factors.emplace_back(irr, mult);
    }
    std::sort(fac.factors.begin(), fac.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (long i = a.first.degree(); i >= 0; --i) {
            const Scalar x = a.first.coeff(i), y = b.first.coeff(i);
            if (x != y) return x < y;
        }
        return a.second < b.second;
    });
    return fac;
}

// ---------------------------------------------------------------------------
// Factorization over Q: squarefree + rational roots + Hensel/Zassenhaus
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>; // lowest degree first, trimmed

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : mpz_class(0)) - (i < b.size() ? b[i] : mpz_class(0));
    ztrim(r);
    return r;
}

// symmetric representative in (-m/2, m/2]
mpz_class zsym(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zmod_sym(const ZPoly& a, const mpz_class& m) {
    ZPoly r = a;
    for (auto& c : r) c = zsym(c, m);
    ztrim(r);
    return r;
}

// division by a monic divisor; exact integer arithmetic
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& d) {
    if (d.empty() || d.back() != 1) throw coalg_error("zdivmod_monic: divisor not monic");
    ZPoly rem = a, quo;
    if (a.size() < d.size()) return {ZPoly{}, a};
    quo.assign(a.size() - d.size() + 1, mpz_class(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class q = (k + d.size() - 1 < rem.size()) ? rem[k + d.size() - 1] : mpz_class(0);
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    ztrim(rem);
    return {quo, rem};
}

mpz_class zcontent(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(ZPoly a) {
    mpz_class g = zcontent(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g; // normalize sign so the leading coefficient is positive
    for (auto& c : a) c /= g;
    return a;
}

Polynomial zpoly_to_gf(const ZPoly& a, const Field& k) {
    std::vector<Scalar> c;
    c.reserve(a.size());
    for (const auto& v : a) {
        mpz_class r = v % k.characteristic();
        if (r < 0) r += k.characteristic();
        c.push_back(Scalar::of_int(k, r.get_si()));
    }
    return Polynomial(k, std::move(c));
}

ZPoly gf_to_zpoly_sym(const Polynomial& a) {
    const std::uint32_t p = a.field().characteristic();
    ZPoly r;
    for (long i = 0; i <= a.degree(); ++i) {
        mpz_class v = static_cast<unsigned long>(a.coeff(i).residue());
        r.push_back(zsym(v, mpz_class(p)));
    }
    ztrim(r);
    return r;
}

// Extended Euclid over GF(p): s*a + t*b == gcd (monic).
void poly_ext_gcd(const Polynomial& a, const Polynomial& b, Polynomial& s, Polynomial& t) {
    const Field& k = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Scalar::one(k)), s1 = Polynomial::zero(k);
    Polynomial t0 = Polynomial::zero(k), t1 = Polynomial::constant(Scalar::one(k));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    Scalar inv = r0.leading().inverse();
    s = s0.scaled(inv);
    t = t0.scaled(inv);
}

// Linear Hensel lift of a monic coprime pair: f == g*h mod p, all monic;
// returns (G, H) with f == G*H mod target and G == g, H == h mod p.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const Polynomial& g0, const Polynomial& h0,
                                    const mpz_class& p, const mpz_class& target) {
    const Field k = g0.field();
    Polynomial s(k), t(k);
    poly_ext_gcd(g0, h0, s, t);

    ZPoly g = gf_to_zpoly_sym(g0);
    ZPoly h = gf_to_zpoly_sym(h0);
    g.resize(static_cast<std::size_t>(g0.degree()) + 1, mpz_class(0));
    h.resize(static_cast<std::size_t>(h0.degree()) + 1, mpz_class(0));
    g.back() = 1;
    h.back() = 1;

    mpz_class m = p;
    while (m < target) {
        // e = (f - g*h)/m mod p
        ZPoly diff = zsub(f, zmul(g, h));
        ZPoly e;
        e.reserve(diff.size());
        for (auto& c : diff) e.push_back(c / m);
        Polynomial ebar = zpoly_to_gf(e, k);
        // u = t*e mod g0, v = (e - u*h0)/g0
        Polynomial u = (t * ebar).divmod(g0).second;
        auto [v, rem] = (ebar - u * h0).divmod(g0);
        if (!rem.is_zero()) throw coalg_error("hensel_pair: inexact correction (bug)");
        ZPoly du = gf_to_zpoly_sym(u);
        ZPoly dv = gf_to_zpoly_sym(v);
        for (std::size_t i = 0; i < du.size(); ++i) g[i] += m * du[i];
        for (std::size_t i = 0; i < dv.size(); ++i) h[i] += m * dv[i];
        m *= p;
    }
    ZPoly gs = zmod_sym(g, m), hs = zmod_sym(h, m);
    gs.resize(static_cast<std::size_t>(g0.degree()) + 1, mpz_class(0));
    hs.resize(static_cast<std::size_t>(h0.degree()) + 1, mpz_class(0));
    gs.back() = 1;
    hs.back() = 1;
    return {gs, hs};
}

// Lift the full modular factor list through a balanced product tree.
void hensel_tree(const ZPoly& f, const std::vector<Polynomial>& parts, const mpz_class& p,
                 const mpz_class& target, std::vector<ZPoly>& out) {
    if (parts.size() == 1) {
        ZPoly lifted = zmod_sym(f, target);
        out.push_back(lifted);
        return;
    }
    std::size_t half = parts.size() / 2;
    Polynomial g0 = Polynomial::constant(Scalar::one(parts.front().field()));
    Polynomial h0 = g0;
    for (std::size_t i = 0; i < half; ++i) g0 = g0 * parts[i];
    for (std::size_t i = half; i < parts.size(); ++i) h0 = h0 * parts[i];
    auto [g, h] = hensel_pair(f, g0, h0, p, target);
    hensel_tree(g, std::vector<Polynomial>(parts.begin(), parts.begin() + half), p, target, out);
    hensel_tree(h, std::vector<Polynomial>(parts.begin() + half, parts.end()), p, target, out);
}

mpz_class factor_coeff_bound(const ZPoly& f) {
    // Landau-Mignotte style: 2^deg * (1 + l2 norm), generous on purpose
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class s = sqrt(norm2) + 1;
    mpz_class two_d = 1;
    two_d <<= (f.size() - 1);
    return 2 * two_d * s + 1;
}

// Factor a primitive squarefree MONIC integer polynomial of degree >= 1.
std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& f) {
    const long deg = static_cast<long>(f.size()) - 1;
    if (deg == 1) return {f};

    static const std::vector<std::uint32_t> primes = {
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
        179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269};

    for (std::uint32_t p : primes) {
        Field k = Field::gf(p);
        Polynomial fbar = zpoly_to_gf(f, k);
        if (fbar.degree() != deg) continue; // cannot happen for monic, kept for safety
        if (poly_gcd(fbar, fbar.derivative()).degree() != 0) continue; // not squarefree mod p

        Factorization modfac = factor_gf(fbar);
        std::vector<Polynomial> parts;
        for (const auto& [irr, mult] : modfac.factors)
            for (int i = 0; i < mult; ++i) parts.push_back(irr);
        if (parts.size() == 1) return {f};

        mpz_class bound = factor_coeff_bound(f);
        mpz_class target = p;
        while (target < bound) target *= p;

        std::vector<ZPoly> lifted;
        hensel_tree(zmod_sym(f, target), parts, mpz_class(p), target, lifted);

        // subset recombination, cardinality 1 .. half of the survivors
        std::vector<ZPoly> result;
        ZPoly rest = f;
        std::vector<std::size_t> alive(lifted.size());
        for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = i;
        bool progress = true;
        while (progress && !alive.empty()) {
            progress = false;
            for (std::size_t card = 1; 2 * card <= alive.size() && !progress; ++card) {
                std::vector<std::size_t> c(card);
                for (std::size_t i = 0; i < card; ++i) c[i] = i;
                while (true) {
                    ZPoly cand{mpz_class(1)};
                    for (std::size_t i = 0; i < card; ++i) cand = zmul(cand, lifted[alive[c[i]]]);
                    cand = zmod_sym(cand, target);
                    auto [q, r] = zdivmod_monic(rest, cand);
                    if (r.empty() && cand.size() > 1) {
                        result.push_back(cand);
                        rest = q;
                        std::vector<std::size_t> keep;
                        for (std::size_t i = 0, ci = 0; i < alive.size(); ++i) {
                            if (ci < card && c[ci] == i) { ++ci; continue; }
                            keep.push_back(alive[i]);
                        }
                        alive = std::move(keep);
                        progress = true;
                        break;
                    }
                    long pos = static_cast<long>(card) - 1;
                    while (pos >= 0 &&
                           c[pos] == alive.size() - card + static_cast<std::size_t>(pos)) --pos;
                    if (pos < 0) break;
                    ++c[pos];
                    for (std::size_t i = pos + 1; i < card; ++i) c[i] = c[i - 1] + 1;
                }
            }
        }
        if (rest.size() > 1) result.push_back(rest); // remaining survivors form one factor
        return result;
    }
    throw coalg_error("factor_monic_squarefree_z: no admissible prime found");
}

// primitive part of h(c*x)
ZPoly descale_factor(const ZPoly& h, const mpz_class& c) {
    ZPoly r = h;
    mpz_class pw = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= c;
    }
    return zprimitive(std::move(r));
}

Polynomial zpoly_to_q_monic(const ZPoly& a, const Field& f) {
    std::vector<Scalar> c;
    mpq_class lead(a.back());
    for (const auto& v : a) c.push_back(Scalar::of_mpq(mpq_class(v) / lead));
    return Polynomial(f, std::move(c));
}

// Factor a squarefree monic polynomial over Q.
std::vector<Polynomial> factor_squarefree_q(const Polynomial& f) {
    const Field& field = f.field();
    if (f.degree() == 1) return {f};

    // clear denominators -> primitive integer polynomial
    mpz_class den = 1;
    for (long i = 0; i <= f.degree(); ++i) {
        Scalar c = f.coeff(i);
        mpz_class d = c.rational().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    ZPoly z;
    for (long i = 0; i <= f.degree(); ++i) {
        Scalar c = f.coeff(i);
        mpq_class q = c.rational() * mpq_class(den);
        z.push_back(q.get_num());
    }
    z = zprimitive(std::move(z));

    std::vector<Polynomial> out;

    // rational root extraction (cheap classical stage)
    mpz_class a0 = z.front(), an = z.back();
    while (z.size() > 1 && z.front() == 0) {
        out.push_back(Polynomial::x(field));
        z.erase(z.begin());
    }
    if (z.size() > 1) {
        a0 = z.front();
        an = z.back();
        auto divisors = [](mpz_class n) {
            std::vector<mpz_class> d;
            n = abs(n);
            if (n > 1000000000) return d; // leave big cases to the Hensel stage
            for (mpz_class i = 1; i * i <= n; ++i)
                if (n % i == 0) {
                    d.push_back(i);
                    if (i * i != n) d.push_back(n / i);
                }
            return d;
        };
        std::vector<mpz_class> num = divisors(a0), denom = divisors(an);
        bool changed = true;
        while (changed && z.size() > 1) {
            changed = false;
            for (const auto& pn : num) {
                for (const auto& qd : denom) {
                    mpz_class g;
                    mpz_gcd(g.get_mpz_t(), pn.get_mpz_t(), qd.get_mpz_t());
                    if (g != 1) continue;
                    for (int sign = 1; sign >= -1; sign -= 2) {
                        mpq_class root(sign * pn, qd);
                        root.canonicalize();
                        // evaluate z at root
                        mpq_class acc = 0;
                        for (std::size_t i = z.size(); i-- > 0;) acc = acc * root + mpq_class(z[i]);
                        if (acc == 0) {
                            // divide by (qd*x - sign*pn)
                            Polynomial lin(field, {Scalar::of_mpq(-root), Scalar::one(field)});
                            Polynomial cur = zpoly_to_q_monic(z, field);
                            auto [quo, rem] = cur.divmod(lin);
                            if (!rem.is_zero()) continue;
                            out.push_back(lin);
                            // back to primitive integer form
                            ZPoly nz;
                            mpz_class nden = 1;
                            for (long i = 0; i <= quo.degree(); ++i) {
                                Scalar c2 = quo.coeff(i);
                                mpz_class d2 = c2.rational().get_den();
                                mpz_class g2;
                                mpz_gcd(g2.get_mpz_t(), nden.get_mpz_t(), d2.get_mpz_t());
                                nden = nden / g2 * d2;
                            }
                            for (long i = 0; i <= quo.degree(); ++i) {
                                Scalar c2 = quo.coeff(i);
                                nz.push_back(mpq_class(c2.rational() * nden).get_num());
                            }
                            z = zprimitive(std::move(nz));
                            changed = true;
                            break;
                        }
                    }
                    if (changed) break;
                }
                if (changed) break;
            }
        }
    }

    if (z.size() == 1) return out;
    if (z.size() == 2) {
        out.push_back(zpoly_to_q_monic(z, field));
        return out;
    }

    // Zassenhaus via the monic transform M(y) = lc^(d-1) f(y/lc), so
    // M_i = z_i * lc^(d-1-i) for i < d and M_d = 1.
    mpz_class lc = z.back();
    const std::size_t d = z.size() - 1;
    ZPoly monic(z.size());
    monic[d] = 1;
    mpz_class scale = 1;
    for (std::size_t i = d; i-- > 0;) {
        monic[i] = z[i] * scale;
        scale *= lc;
    }

    auto factors_m = factor_monic_squarefree_z(monic);
    if (factors_m.size() == 1) {
        out.push_back(zpoly_to_q_monic(z, field));
        return out;
    }
    for (const auto& h : factors_m) out.push_back(zpoly_to_q_monic(descale_factor(h, lc), field));
    return out;
}

Factorization factor_q(const Polynomial& input, int degree_cap) {
    if (input.degree() > degree_cap)
        throw degree_cap_exceeded("factor_univariate: degree " + std::to_string(input.degree()) +
                                  " exceeds cap " + std::to_string(degree_cap));
    Factorization fac;
    fac.unit = input.leading();
    Polynomial f = input.monic();

    // Yun squarefree decomposition (characteristic zero)
    std::vector<std::pair<Polynomial, int>> square_parts;
    Polynomial fp = f.derivative();
    Polynomial a = poly_gcd(f, fp);
    Polynomial b = f.divmod(a).first;
    Polynomial c = fp.divmod(a).first;
    Polynomial dpoly = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial g = poly_gcd(b, dpoly);
        if (g.degree() > 0) square_parts.emplace_back(g.monic(), i);
        b = b.divmod(g).first;
        c = dpoly.divmod(g).first;
        dpoly = c - b.derivative();
        ++i;
    }

    for (const auto& [part, mult] : square_parts)
        for (const auto& irr : factor_squarefree_q(part)) fac.factors.emplace_back(irr.monic(), mult);

    std::sort(fac.factors.begin(), fac.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        for (long k = x.first.degree(); k >= 0; --k) {
            const Scalar u = x.first.coeff(k), v = y.first.coeff(k);
            if (u != v) return u < v;
        }
        return x.second < y.second;
    });
    return fac;
}

} // namespace

Factorization factor_univariate(const Polynomial& p, int degree_cap) {
    if (p.is_zero()) throw invalid_structure("factor_univariate: zero polynomial");
    if (p.degree() == 0) {
        Factorization fac;
        fac.unit = p.leading();
        return fac;
    }
    return p.field().is_rational() ? factor_q(p, degree_cap) : factor_gf(p);
}

bool is_irreducible(const Polynomial& p, int degree_cap) {
    if (p.degree() < 1) return false;
    auto fac = factor_univariate(p, degree_cap);
    return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

} // namespace coalglab
