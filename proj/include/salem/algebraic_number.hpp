/* Real algebraic numbers as (squarefree defining polynomial, isolating
 * rational interval), with Descartes-counted isolation, bisection plus
 * interval-Newton refinement, and exact comparison. */
#ifndef SALEM_ALGEBRAIC_NUMBER_HPP
#define SALEM_ALGEBRAIC_NUMBER_HPP

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "salem/int_polynomial.hpp"
#include "salem/real_ball.hpp"

namespace salem {

namespace detail {

/* Descartes count of the image of p under x -> (a + b y)/(1 + y), which maps
 * y in (0, inf) onto x in (a, b). Returns the number of sign variations; by
 * Vincent's theorem it reaches 0 or 1 on small enough intervals when p is
 * squarefree. */
inline int mobius_variation_count(const IntPolynomial& p, const Rat& a, const Rat& b) {
    const long d = p.degree();
    std::vector<Rat> acc(static_cast<std::size_t>(d) + 1, Rat(0));
    /* q(y) = sum_i c_i (a + b y)^i (1 + y)^{d-i} */
    std::vector<Rat> lin{Rat(1)};          // (a + b y)^i, built incrementally
    std::vector<std::vector<Rat>> onep(static_cast<std::size_t>(d) + 1);
    onep[0] = {Rat(1)};
    for (long k = 1; k <= d; ++k) {        // (1 + y)^k
        onep[k].assign(static_cast<std::size_t>(k) + 1, Rat(0));
        for (long j = 0; j < k; ++j) {
            onep[k][j] += onep[k - 1][j];
            onep[k][j + 1] += onep[k - 1][j];
        }
    }
    for (long i = 0; i <= d; ++i) {
        const Int& ci = p[static_cast<std::size_t>(i)];
        if (ci != 0) {
            const auto& rest = onep[d - i];
            for (std::size_t u = 0; u < lin.size(); ++u)
                for (std::size_t v = 0; v < rest.size(); ++v)
                    acc[u + v] += Rat(ci) * lin[u] * rest[v];
        }
        if (i < d) {   // lin *= (a + b y)
            std::vector<Rat> next(lin.size() + 1, Rat(0));
            for (std::size_t u = 0; u < lin.size(); ++u) {
                next[u] += lin[u] * a;
                next[u + 1] += lin[u] * b;
            }
            lin = std::move(next);
        }
    }
    int changes = 0, last = 0;
    for (const Rat& q : acc) {
        int s = sgn(q);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace detail

/* Pairwise-disjoint isolating intervals for the real roots of p inside the
 * open interval (lo, hi). Rational roots come back as point intervals.
 * p is made squarefree internally. */
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPolynomial& p_in,
                                                           const Rat& lo, const Rat& hi) {
    if (p_in.is_zero()) throw DomainError("isolate_real_roots of zero polynomial");
    IntPolynomial p = squarefree_part(p_in.primitive_part());
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() <= 0) return out;

    std::vector<std::pair<Rat, Rat>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (!(a < b)) continue;
        int count = detail::mobius_variation_count(p, a, b);
        if (count == 0) continue;
        if (count == 1 && p.sign_at(a) != 0 && p.sign_at(b) != 0) {
            out.emplace_back(a, b);
            continue;
        }
        Rat m = (a + b) / 2;
        if (p.sign_at(m) == 0) out.emplace_back(m, m);
        work.emplace_back(a, m);
        work.emplace_back(m, b);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

class AlgebraicNumber {
public:
    /* The interval (lo, hi) must isolate exactly one real root of p unless
     * lo == hi names a rational root. Verified unless trust_isolated. */
    AlgebraicNumber(IntPolynomial p, Rat lo, Rat hi, bool trust_isolated = false)
        : poly_(squarefree_part(p.primitive_part())) {
        if (sgn(poly_.leading()) < 0) poly_ = -poly_;
        if (lo == hi) {
            require(poly_.sign_at(lo) == 0, "point interval is not a root");
        } else {
            require(poly_.sign_at(lo) != 0 && poly_.sign_at(hi) != 0,
                    "isolating interval endpoints must not be roots");
            if (!trust_isolated)
                require(detail::mobius_variation_count(poly_, lo, hi) == 1,
                        "interval does not isolate exactly one root");
        }
        cache_ = std::make_shared<Cache>();
        cache_->lo = std::move(lo);
        cache_->hi = std::move(hi);
    }

    static AlgebraicNumber rational(const Rat& q) {
        IntPolynomial p({-q.get_num(), q.get_den()});
        return AlgebraicNumber(std::move(p), q, q, true);
    }

    const IntPolynomial& defining_poly() const { return poly_; }

    std::pair<Rat, Rat> interval() const {
        std::scoped_lock lk(cache_->m);
        return {cache_->lo, cache_->hi};
    }

    bool is_rational() const {
        std::scoped_lock lk(cache_->m);
        return cache_->lo == cache_->hi;
    }

    /* Ball enclosure with radius at most 2^-bits. */
    RealBall enclosure(Prec bits) const {
        Rat w{1};
        w >>= static_cast<unsigned long>(bits);
        refine_to_width(w);
        auto [lo, hi] = interval();
        return RealBall::from_interval(lo, hi, bits + 32);
    }

    /* Enclosure of radius <= target (spec: refine). */
    RealBall refine(const Rat& target_radius) const {
        if (target_radius <= 0) throw DomainError("refine: target_radius must be positive");
        refine_to_width(target_radius);
        auto [lo, hi] = interval();
        /* precision comfortably finer than the interval width */
        unsigned long bits = 64;
        Rat w = hi - lo;
        if (w > 0) {
            mpz_class num = w.get_num(), den = w.get_den();
            bits = std::max<unsigned long>(64, mpz_sizeinbase(den.get_mpz_t(), 2) + 32);
        }
        return RealBall::from_interval(lo, hi, static_cast<Prec>(bits));
    }

    int sign() const { return compare_rational(Rat(0)); }

    /* exact three-way comparison with a rational */
    int compare_rational(const Rat& q) const {
        std::scoped_lock lk(cache_->m);
        if (cache_->lo == cache_->hi) return cmp(cache_->lo, q) < 0 ? -1 : cache_->lo == q ? 0 : 1;
        if (q <= cache_->lo) {
            if (q < cache_->lo) return 1;
            return 1;  // endpoints are never roots
        }
        if (q >= cache_->hi) return -1;
        int s = poly_.sign_at(q);
        if (s == 0) return 0;
        /* root lies left of q iff sign changes on (lo, q) */
        return poly_.sign_at(cache_->lo) != s ? -1 : 1;
    }

    /* exact three-way comparison of two algebraic numbers */
    int compare(const AlgebraicNumber& o) const {
        for (;;) {
            auto [alo, ahi] = interval();
            auto [blo, bhi] = o.interval();
            /* endpoints are never roots, so touching intervals still separate */
            if (ahi <= blo) return -1;
            if (bhi <= alo) return 1;
            /* overlapping: equal only via a shared factor's root in the overlap */
            IntPolynomial g = poly_gcd(poly_, o.poly_);
            if (g.degree() >= 1) {
                Rat lo = std::max(alo, blo), hi = std::min(ahi, bhi);
                if (lo < hi && !isolate_real_roots(g, lo, hi).empty()) return 0;
                if (lo == hi && g.sign_at(lo) == 0) return 0;
            }
            halve();
            o.halve();
        }
    }

    bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }

    /* Decimal string truncated (not rounded) to `places` fractional digits. */
    std::string decimal_truncated(unsigned places) const {
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
        for (;;) {
            auto [lo, hi] = interval();
            Int flo, fhi;
            {
                Rat s = lo * Rat(scale);
                mpz_fdiv_q(flo.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
                s = hi * Rat(scale);
                mpz_fdiv_q(fhi.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
            }
            if (flo == fhi || lo == hi) {
                bool neg = flo < 0;
                Int a = abs(flo);
                std::string digits = a.get_str();
                while (digits.size() <= places) digits.insert(digits.begin(), '0');
                digits.insert(digits.size() - places, ".");
                if (places == 0) digits.pop_back();
                return (neg ? "-" : "") + digits;
            }
            halve();
        }
    }

    double to_double() const {
        return enclosure(64).mid_d();
    }

private:
    struct Cache {
        mutable std::mutex m;
        Rat lo, hi;
    };

    void halve() const {
        std::scoped_lock lk(cache_->m);
        halve_locked();
    }

    void halve_locked() const {
        if (cache_->lo == cache_->hi) return;
        Rat m = (cache_->lo + cache_->hi) / 2;
        int s = poly_.sign_at(m);
        if (s == 0) {
            cache_->lo = cache_->hi = m;
            return;
        }
        if (poly_.sign_at(cache_->lo) != s)
            cache_->hi = m;
        else
            cache_->lo = m;
    }

    void refine_to_width(const Rat& target) const {
        std::scoped_lock lk(cache_->m);
        IntPolynomial dp = poly_.derivative();
        while (cache_->hi - cache_->lo > target) {
            if (try_newton_locked(dp)) continue;
            halve_locked();
            if (cache_->lo == cache_->hi) return;
        }
    }

    /* One interval-Newton contraction step in ball arithmetic; endpoints stay
     * dyadic because they come from mpfr bounds. Returns true on progress. */
    bool try_newton_locked(const IntPolynomial& dp) const {
        const Rat w = cache_->hi - cache_->lo;
        if (w == 0) return true;
        /* working precision ~ twice the current accuracy */
        unsigned long wbits = mpz_sizeinbase(w.get_den().get_mpz_t(), 2);
        Prec prec = static_cast<Prec>(std::max<unsigned long>(96, 2 * wbits + 32));
        RealBall I = RealBall::from_interval(cache_->lo, cache_->hi, prec);
        RealBall dI = evaluate(dp, I);
        if (dI.contains_zero()) return false;
        Rat x0 = (cache_->lo + cache_->hi) / 2;
        RealBall px = evaluate(poly_, RealBall::from_rational(x0, prec));
        RealBall step = px / dI;
        RealBall nx = RealBall::from_rational(x0, prec) - step;
        /* convert ball bounds back to exact rationals */
        detail::MpfrTmp t(prec);
        Rat nlo, nhi;
        nx.lower(t.x);
        {
            mpq_t q; mpq_init(q);
            mpfr_get_q(q, t.x);
            nlo = Rat(q);
            mpq_clear(q);
        }
        nx.upper(t.x);
        {
            mpq_t q; mpq_init(q);
            mpfr_get_q(q, t.x);
            nhi = Rat(q);
            mpq_clear(q);
        }
        if (nlo < cache_->lo) nlo = cache_->lo;
        if (nhi > cache_->hi) nhi = cache_->hi;
        if (!(nlo < nhi)) return false;
        if (nhi - nlo >= w * Rat(3, 4)) return false;  // not enough contraction
        /* 0 not in p'(I): p is monotonic on I, and the interval Newton image
         * intersected with I contains the root. */
        cache_->lo = std::move(nlo);
        cache_->hi = std::move(nhi);
        return true;
    }

    IntPolynomial poly_;
    std::shared_ptr<Cache> cache_;
};

} // namespace salem

#endif
