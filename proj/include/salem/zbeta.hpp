/* Exact arithmetic in Z[beta] for a fixed monic defining polynomial, and the
 * exact sign of elements via adaptive-precision ball evaluation with an
 * algebraic zero test as fallback for reducible defining polynomials. */
#ifndef SALEM_ZBETA_HPP
#define SALEM_ZBETA_HPP

#include <memory>
#include <vector>

#include "salem/algebraic_number.hpp"

namespace salem {

/* Precision policy: start at 64 bits, double on demand. At kExactTestPrec we
 * decide zero-vs-nonzero algebraically, after which further doubling is
 * guaranteed to terminate; kPrecCap is the per-decision escalation cap. */
constexpr Prec kSignStartPrec = 64;
constexpr Prec kExactTestPrec = 4096;
constexpr Prec kPrecCap = 1 << 16;

class ZBetaBasis {
public:
    explicit ZBetaBasis(AlgebraicNumber beta) : beta_(std::move(beta)) {
        const IntPolynomial& p = beta_.defining_poly();
        require(p.degree() >= 1, "ZBetaBasis needs degree >= 1");
        require(p.leading() == 1, "ZBetaBasis needs a monic defining polynomial");
        d_ = static_cast<std::size_t>(p.degree());
        reduction_.resize(d_);
        for (std::size_t i = 0; i < d_; ++i) reduction_[i] = -p[i];  // x^d = -(p - x^d)
    }

    const AlgebraicNumber& beta() const { return beta_; }
    std::size_t degree() const { return d_; }
    const std::vector<Int>& reduction_row() const { return reduction_; }

private:
    AlgebraicNumber beta_;
    std::size_t d_;
    std::vector<Int> reduction_;
};

class ZBetaElement {
public:
    ZBetaElement(std::shared_ptr<const ZBetaBasis> basis, std::vector<Int> coords)
        : basis_(std::move(basis)), c_(std::move(coords)) {
        require(c_.size() == basis_->degree(), "coordinate size mismatch");
    }

    static ZBetaElement zero(std::shared_ptr<const ZBetaBasis> basis) {
        std::vector<Int> v(basis->degree());
        return {std::move(basis), std::move(v)};
    }

    static ZBetaElement one(std::shared_ptr<const ZBetaBasis> basis) {
        std::vector<Int> v(basis->degree());
        v[0] = 1;
        return {std::move(basis), std::move(v)};
    }

    /* beta itself (or the reduction row when d == 1) */
    static ZBetaElement beta(std::shared_ptr<const ZBetaBasis> basis) {
        return one(std::move(basis)).times_beta();
    }

    const std::vector<Int>& coords() const { return c_; }
    const std::shared_ptr<const ZBetaBasis>& basis() const { return basis_; }

    bool is_integer_zero() const {
        for (const Int& v : c_)
            if (v != 0) return false;
        return true;
    }

    ZBetaElement operator+(const ZBetaElement& o) const {
        std::vector<Int> v(c_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
        return {basis_, std::move(v)};
    }

    ZBetaElement operator-(const ZBetaElement& o) const {
        std::vector<Int> v(c_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
        return {basis_, std::move(v)};
    }

    ZBetaElement operator-() const {
        std::vector<Int> v(c_);
        for (Int& x : v) x = -x;
        return {basis_, std::move(v)};
    }

    ZBetaElement minus_int(const Int& k) const {
        std::vector<Int> v(c_);
        v[0] -= k;
        return {basis_, std::move(v)};
    }

    ZBetaElement times_int(const Int& k) const {
        std::vector<Int> v(c_);
        for (Int& x : v) x *= k;
        return {basis_, std::move(v)};
    }

    /* multiply by beta: shift coordinates and reduce x^d via the basis row */
    ZBetaElement times_beta() const {
        const std::size_t d = basis_->degree();
        std::vector<Int> v(d);
        const Int& top = c_[d - 1];
        for (std::size_t i = d; i-- > 1;) v[i] = c_[i - 1];
        v[0] = 0;
        if (top != 0) {
            const auto& row = basis_->reduction_row();
            for (std::size_t i = 0; i < d; ++i) v[i] += top * row[i];
        }
        return {basis_, std::move(v)};
    }

    ZBetaElement operator*(const ZBetaElement& o) const {
        const std::size_t d = basis_->degree();
        ZBetaElement acc = zero(basis_);
        ZBetaElement shifted = *this;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.c_[j] != 0) acc = acc + shifted.times_int(o.c_[j]);
            if (j + 1 < d) shifted = shifted.times_beta();
        }
        return acc;
    }

    IntPolynomial as_polynomial() const { return IntPolynomial(c_); }

    RealBall evaluate_ball(Prec prec) const {
        RealBall b = basis_->beta().enclosure(prec);
        return ::salem::evaluate(as_polynomial(), b);
    }

    bool operator==(const ZBetaElement& o) const { return c_ == o.c_; }

    std::size_t hash() const {
        std::size_t h = 14695981039346656037ull;
        for (const Int& v : c_) {
            h ^= static_cast<std::size_t>(mpz_get_si(v.get_mpz_t())) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::shared_ptr<const ZBetaBasis> basis_;
    std::vector<Int> c_;
};

/* Exact algebraic zero test: value(x) == 0 iff gcd(residue, defining poly)
 * vanishes at beta, i.e. the gcd has a root inside beta's isolating interval.
 * This never misfires because the defining polynomial is squarefree and beta
 * is its unique root there. */
inline bool is_exact_zero(const ZBetaElement& x) {
    if (x.is_integer_zero()) return true;
    IntPolynomial g = poly_gcd(x.as_polynomial(), x.basis()->beta().defining_poly());
    if (g.degree() < 1) return false;
    auto [lo, hi] = x.basis()->beta().interval();
    if (lo == hi) return g.sign_at(lo) == 0;
    return !isolate_real_roots(g, lo, hi).empty();
}

/* Sign of the real value of x at beta. Terminates: either ball evaluation
 * separates the value from zero, or the algebraic test certifies zero. */
inline int sign_exact(const ZBetaElement& x) {
    if (x.is_integer_zero()) return 0;
    bool zero_tested = false;
    for (Prec prec = kSignStartPrec;; prec *= 2) {
        RealBall b = x.evaluate_ball(prec);
        int s = b.sign_certain();
        if (s != 0) return s;
        if (!zero_tested && prec >= kExactTestPrec) {
            if (is_exact_zero(x)) return 0;
            zero_tested = true;  // nonzero: keep escalating, separation must come
        }
        if (prec >= kPrecCap && !zero_tested) {
            if (is_exact_zero(x)) return 0;
            zero_tested = true;
        }
    }
}

} // namespace salem

#endif
