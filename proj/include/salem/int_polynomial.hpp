/* Exact integer-coefficient polynomials: arithmetic, gcd, reciprocal,
 * cyclotomic trial division and the A*B*C splitting of sections. */
#ifndef SALEM_INT_POLYNOMIAL_HPP
#define SALEM_INT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <iosfwd>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "salem/errors.hpp"

namespace salem {

using Int = mpz_class;
using Rat = mpq_class;

/* Coefficients ascending by degree; highest stored coefficient nonzero.
 * The zero polynomial has an empty coefficient vector and degree -1. */
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> ascending) : c_(std::move(ascending)) {
        normalize();
    }

    IntPolynomial(std::initializer_list<long> ascending) {
        c_.reserve(ascending.size());
        for (long v : ascending) c_.emplace_back(v);
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({1}); }

    /* c * X^k */
    static IntPolynomial monomial(Int coeff, std::size_t k) {
        std::vector<Int> v(k + 1);
        v[k] = std::move(coeff);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Int& operator[](std::size_t i) const {
        static const Int kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<Int>& coefficients() const { return c_; }

    const Int& leading() const {
        require(!c_.empty(), "leading() of zero polynomial");
        return c_.back();
    }
    const Int& constant() const { return (*this)[0]; }

    /* Max |a_j| over all coefficients. */
    Int height_full() const {
        Int h = 0;
        for (const Int& a : c_) {
            Int v = abs(a);
            if (v > h) h = v;
        }
        return h;
    }

    /* The paper's H := max_{j=1..d-1} |a_j| over interior coefficients,
     * floored at 1 so it can serve as a height in the trail bounds. */
    Int height_interior() const {
        Int h = 1;
        for (std::size_t j = 1; j + 1 < c_.size(); ++j) {
            Int v = abs(c_[j]);
            if (v > h) h = v;
        }
        return h;
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    IntPolynomial operator-() const {
        std::vector<Int> v(c_);
        for (Int& a : v) a = -a;
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<Int> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<Int> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<Int> v(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] += c_[i] * o.c_[j];
        }
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator*(const Int& k) const {
        if (k == 0) return zero();
        std::vector<Int> v(c_);
        for (Int& a : v) a *= k;
        return IntPolynomial(std::move(v));
    }

    /* this * X^k */
    IntPolynomial shifted(std::size_t k) const {
        if (is_zero()) return zero();
        std::vector<Int> v(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
        return IntPolynomial(std::move(v));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<Int> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
        return IntPolynomial(std::move(v));
    }

    Int evaluate(const Int& x) const {
        Int r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            r *= x;
            r += c_[i];
        }
        return r;
    }

    Rat evaluate(const Rat& x) const {
        Rat r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            r *= x;
            r += c_[i];
        }
        return r;
    }

    /* Sign of p(a/b) without building the rational: sum c_i a^i b^(d-i). */
    int sign_at(const Rat& x) const {
        if (is_zero()) return 0;
        const Int& a = x.get_num();
        const Int& b = x.get_den();
        Int acc = 0, apow = 1;
        std::vector<Int> bpow(c_.size());
        bpow[c_.size() - 1] = 1;
        for (std::size_t i = c_.size() - 1; i-- > 0;) bpow[i] = bpow[i + 1] * b;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            acc += c_[i] * apow * bpow[i];
            apow *= a;
        }
        return sgn(acc);
    }

    /* X^{deg p} p(1/X). Requires a nonzero polynomial. */
    IntPolynomial reciprocal() const {
        if (is_zero()) throw DomainError("reciprocal of zero polynomial");
        std::vector<Int> v(c_.rbegin(), c_.rend());
        return IntPolynomial(std::move(v));
    }

    bool is_reciprocal() const {
        if (is_zero()) throw DomainError("is_reciprocal of zero polynomial");
        return *this == reciprocal();
    }

    /* Divide out the gcd of the coefficients; sign of leading coefficient kept. */
    IntPolynomial primitive_part() const {
        if (is_zero()) return zero();
        Int g = 0;
        for (const Int& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        std::vector<Int> v(c_);
        for (Int& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        return IntPolynomial(std::move(v));
    }

    Int content() const {
        Int g = 0;
        for (const Int& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        return g;
    }

    /* Exact division; nullopt when the remainder is nonzero. */
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& d) const {
        if (d.is_zero()) throw DomainError("division by zero polynomial");
        if (is_zero()) return zero();
        if (degree() < d.degree()) return std::nullopt;
        std::vector<Int> rem(c_);
        std::vector<Int> q(c_.size() - d.c_.size() + 1);
        for (std::size_t i = q.size(); i-- > 0;) {
            Int& top = rem[i + d.c_.size() - 1];
            if (top == 0) continue;
            Int qi;
            mpz_fdiv_qr(qi.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(),
                        d.c_.back().get_mpz_t());
            if (top != 0) return std::nullopt;
            q[i] = qi;
            for (std::size_t j = 0; j + 1 < d.c_.size(); ++j)
                rem[i + j] -= qi * d.c_[j];
        }
        for (const Int& r : rem)
            if (r != 0) return std::nullopt;
        return IntPolynomial(std::move(q));
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (const Int& a : c_) {
            h ^= static_cast<std::size_t>(mpz_get_si(a.get_mpz_t()));
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/* Number of sign changes after deleting zeros. */
inline int descartes_sign_changes(const std::vector<Int>& coeffs) {
    int changes = 0, last = 0;
    for (const Int& a : coeffs) {
        int s = sgn(a);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

inline int descartes_sign_changes(const IntPolynomial& p) {
    return descartes_sign_changes(p.coefficients());
}

/* Primitive gcd with positive leading coefficient (primitive PRS). */
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    a = a.is_zero() ? a : a.primitive_part();
    b = b.is_zero() ? b : b.primitive_part();
    while (!b.is_zero()) {
        /* pseudo-remainder of a by b */
        long k = a.degree() - b.degree();
        if (k < 0) {
            std::swap(a, b);
            continue;
        }
        Int lb = b.leading();
        /* lb^{k+1} * a mod b */
        IntPolynomial r = a;
        {
            Int scale;
            mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(k + 1));
            r = r * scale;
        }
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Int q = r.leading() / lb;
            require(r.leading() % lb == 0, "pseudo-division not exact");
            r = r - (b * q).shifted(static_cast<std::size_t>(r.degree() - b.degree()));
        }
        a = b;
        b = r.is_zero() ? r : r.primitive_part();
    }
    if (a.is_zero()) return a;
    if (sgn(a.leading()) < 0) a = -a;
    return a;
}

inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    auto q = p.divide_exact(g * p.content());
    if (!q) q = p.primitive_part().divide_exact(g);
    require(q.has_value(), "squarefree_part: division failed");
    return *q;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/* Phi_k via x^k - 1 = prod_{d | k} Phi_d, by exact division. */
inline const IntPolynomial& cyclotomic(unsigned long k) {
    static std::map<unsigned long, IntPolynomial> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<Int> xk(k + 1);
    xk[0] = -1;
    xk[k] = 1;
    IntPolynomial num{std::move(xk)};
    for (unsigned long d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto q = num.divide_exact(cyclotomic(d));
        require(q.has_value(), "cyclotomic division not exact");
        num = *q;
    }
    return cache.emplace(k, std::move(num)).first->second;
}

struct ABCFactorization {
    IntPolynomial A;  // product of cyclotomic factors of the reciprocal part
    IntPolynomial B;  // remaining reciprocal factor
    IntPolynomial C;  // nonreciprocal part
};

/* Split p = A*B*C where A*B = gcd(p, p*) carries the reciprocal factors,
 * A collects the cyclotomic ones (trial division by Phi_k, phi(k) <= deg p),
 * and C = p/(A*B) is the nonreciprocal part. */
inline ABCFactorization factor_abc(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("factor_abc of zero polynomial");
    IntPolynomial rec = poly_gcd(p, p.reciprocal());
    IntPolynomial a = IntPolynomial::one();
    IntPolynomial b = rec;
    for (unsigned long k = 1; k <= 2 * static_cast<unsigned long>(p.degree()) + 2; ++k) {
        if (euler_phi(k) > static_cast<unsigned long>(p.degree())) continue;
        const IntPolynomial& phi = cyclotomic(k);
        if (phi.degree() > b.degree()) continue;
        for (;;) {
            auto q = b.divide_exact(phi);
            if (!q) break;
            b = *q;
            a = a * phi;
        }
    }
    IntPolynomial ab = a * b;
    auto c = p.divide_exact(ab);
    if (!c) {
        /* gcd is defined up to sign/content relative to p; retry with the
         * primitive part and adjust the unit into C. */
        auto cp = p.primitive_part().divide_exact(ab);
        require(cp.has_value(), "factor_abc: p not divisible by A*B");
        c = IntPolynomial(*cp * p.content());
    }
    ABCFactorization f{std::move(a), std::move(b), std::move(*c)};
    require(f.A * f.B * f.C == p, "factor_abc: A*B*C != p");
    return f;
}

/* ---- text format: one polynomial per line, ascending coefficients,
 * single spaces, '#' starts a comment line. ---- */

inline std::string to_text(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (long i = 0; i <= p.degree(); ++i) {
        if (i) os << ' ';
        os << p[static_cast<std::size_t>(i)].get_str();
    }
    return os.str();
}

inline IntPolynomial poly_from_text(const std::string& line, long line_number = -1) {
    std::istringstream is(line);
    std::vector<Int> v;
    std::string tok;
    while (is >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad coefficient '" + tok + "'", line_number);
        }
    }
    if (v.empty()) throw ParseError("empty polynomial", line_number);
    return IntPolynomial(std::move(v));
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << to_text(p);
}

} // namespace salem

#endif
