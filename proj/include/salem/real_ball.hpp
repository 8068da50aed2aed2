/* Midpoint-radius real balls over MPFR. Every operation returns an enclosure
 * of the exact image of its inputs: midpoints round to nearest, radii
 * propagate upward and absorb the midpoint rounding error. The radius lives
 * in its own low-precision mpfr so that its exponent range never underflows
 * silently the way a double would. */
#ifndef SALEM_REAL_BALL_HPP
#define SALEM_REAL_BALL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "salem/errors.hpp"
#include "salem/int_polynomial.hpp"

namespace salem {

using Prec = mpfr_prec_t;

namespace detail {

constexpr Prec kRadiusPrec = 32;

struct MpfrTmp {
    mpfr_t x;
    explicit MpfrTmp(Prec prec) { mpfr_init2(x, prec); }
    ~MpfrTmp() { mpfr_clear(x); }
    MpfrTmp(const MpfrTmp&) = delete;
    MpfrTmp& operator=(const MpfrTmp&) = delete;
};

} // namespace detail

class RealBall {
public:
    explicit RealBall(Prec prec = 64) : prec_(prec) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, detail::kRadiusPrec);
        mpfr_set_zero(mid_, 1);
        mpfr_set_zero(rad_, 1);
    }

    RealBall(const RealBall& o) : prec_(o.prec_) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, detail::kRadiusPrec);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }

    RealBall(RealBall&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(mid_, 2);
        mpfr_init2(rad_, detail::kRadiusPrec);
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }

    RealBall& operator=(RealBall o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        return *this;
    }

    ~RealBall() {
        mpfr_clear(mid_);
        mpfr_clear(rad_);
    }

    static RealBall exact_int(const Int& v, Prec prec) {
        RealBall b(prec);
        int tern = mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN);
        b.bump_ulp(tern);
        return b;
    }

    static RealBall exact_long(long v, Prec prec) {
        RealBall b(prec);
        mpfr_set_si(b.mid_, v, MPFR_RNDN);
        return b;
    }

    static RealBall from_rational(const Rat& q, Prec prec) {
        RealBall b(prec);
        int tern = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
        b.bump_ulp(tern);
        return b;
    }

    static RealBall from_double(double v, Prec prec) {
        RealBall b(prec);
        mpfr_set_d(b.mid_, v, MPFR_RNDN);
        return b;
    }

    /* Enclosure of the rational interval [lo, hi]. */
    static RealBall from_interval(const Rat& lo, const Rat& hi, Prec prec) {
        require(lo <= hi, "from_interval: lo > hi");
        RealBall b(prec);
        detail::MpfrTmp l(prec), h(prec), half(prec);
        mpfr_set_q(l.x, lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(h.x, hi.get_mpq_t(), MPFR_RNDU);
        mpfr_add(b.mid_, l.x, h.x, MPFR_RNDN);
        mpfr_div_2ui(b.mid_, b.mid_, 1, MPFR_RNDN);
        mpfr_sub(half.x, h.x, b.mid_, MPFR_RNDU);
        mpfr_set(b.rad_, half.x, MPFR_RNDU);
        mpfr_sub(half.x, b.mid_, l.x, MPFR_RNDU);
        mpfr_max(b.rad_, b.rad_, half.x, MPFR_RNDU);
        if (mpfr_sgn(b.rad_) < 0) mpfr_set_zero(b.rad_, 1);
        return b;
    }

    static RealBall pi(Prec prec) {
        RealBall b(prec);
        int tern = mpfr_const_pi(b.mid_, MPFR_RNDN);
        b.bump_ulp(tern);
        return b;
    }

    Prec precision() const { return prec_; }
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }

    bool is_exact() const { return mpfr_zero_p(rad_); }

    bool contains_zero() const {
        detail::MpfrTmp a(detail::kRadiusPrec);
        mpfr_abs(a.x, mid_, MPFR_RNDD);
        return mpfr_cmp(a.x, rad_) <= 0;
    }

    /* Sign when the ball excludes zero, otherwise 0 (undecided). */
    int sign_certain() const {
        if (contains_zero()) return 0;
        return mpfr_sgn(mid_);
    }

    bool is_positive() const { return sign_certain() > 0; }
    bool is_negative() const { return sign_certain() < 0; }

    void lower(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
    void upper(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

    Rat lower_rational() const {
        detail::MpfrTmp t(prec_ + detail::kRadiusPrec);
        lower(t.x);
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, t.x);
        Rat r(q);
        mpq_clear(q);
        return r;
    }

    Rat upper_rational() const {
        detail::MpfrTmp t(prec_ + detail::kRadiusPrec);
        upper(t.x);
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, t.x);
        Rat r(q);
        mpq_clear(q);
        return r;
    }

    double lower_d() const {
        detail::MpfrTmp t(prec_);
        lower(t.x);
        return mpfr_get_d(t.x, MPFR_RNDD);
    }
    double upper_d() const {
        detail::MpfrTmp t(prec_);
        upper(t.x);
        return mpfr_get_d(t.x, MPFR_RNDU);
    }
    double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

    bool certainly_less(const RealBall& o) const {
        detail::MpfrTmp a(prec_), b(o.prec_);
        upper(a.x);
        o.lower(b.x);
        return mpfr_cmp(a.x, b.x) < 0;
    }

    bool certainly_less(double v) const {
        detail::MpfrTmp a(prec_);
        upper(a.x);
        return mpfr_cmp_d(a.x, v) < 0;
    }

    bool certainly_greater(double v) const {
        detail::MpfrTmp a(prec_);
        lower(a.x);
        return mpfr_cmp_d(a.x, v) > 0;
    }

    /* interval containment: o's interval inside this ball's interval */
    bool contains(const RealBall& o) const {
        detail::MpfrTmp tl(prec_), th(prec_), ol(o.prec_), oh(o.prec_);
        lower(tl.x);
        upper(th.x);
        o.lower(ol.x);
        o.upper(oh.x);
        return mpfr_cmp(tl.x, ol.x) <= 0 && mpfr_cmp(oh.x, th.x) <= 0;
    }

    RealBall operator-() const {
        RealBall r(*this);
        mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
        return r;
    }

    RealBall abs() const {
        RealBall r(*this);
        mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
        return r;
    }

    RealBall operator+(const RealBall& o) const {
        RealBall r(std::max(prec_, o.prec_));
        int tern = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
        mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall operator-(const RealBall& o) const {
        RealBall r(std::max(prec_, o.prec_));
        int tern = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
        mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall operator*(const RealBall& o) const {
        RealBall r(std::max(prec_, o.prec_));
        int tern = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
        detail::MpfrTmp am(detail::kRadiusPrec), bm(detail::kRadiusPrec),
            acc(detail::kRadiusPrec), term(detail::kRadiusPrec);
        mpfr_abs(am.x, mid_, MPFR_RNDU);
        mpfr_abs(bm.x, o.mid_, MPFR_RNDU);
        mpfr_mul(acc.x, am.x, o.rad_, MPFR_RNDU);
        mpfr_mul(term.x, bm.x, rad_, MPFR_RNDU);
        mpfr_add(acc.x, acc.x, term.x, MPFR_RNDU);
        mpfr_mul(term.x, rad_, o.rad_, MPFR_RNDU);
        mpfr_add(r.rad_, acc.x, term.x, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall operator*(long k) const { return *this * exact_long(k, prec_); }

    RealBall operator/(const RealBall& o) const {
        RealBall r(std::max(prec_, o.prec_));
        detail::MpfrTmp ly(detail::kRadiusPrec);
        mpfr_abs(ly.x, o.mid_, MPFR_RNDD);
        mpfr_sub(ly.x, ly.x, o.rad_, MPFR_RNDD);
        if (mpfr_sgn(ly.x) <= 0)
            throw DomainError("ball division by interval containing zero");
        int tern = mpfr_div(r.mid_, mid_, o.mid_, MPFR_RNDN);
        /* |x/y - mx/my| <= (rx|my| + |mx|ry) / (ly |my|) */
        detail::MpfrTmp am(detail::kRadiusPrec), bm(detail::kRadiusPrec),
            num(detail::kRadiusPrec), term(detail::kRadiusPrec), den(detail::kRadiusPrec);
        mpfr_abs(am.x, mid_, MPFR_RNDU);
        mpfr_abs(bm.x, o.mid_, MPFR_RNDU);
        mpfr_mul(num.x, rad_, bm.x, MPFR_RNDU);
        mpfr_mul(term.x, am.x, o.rad_, MPFR_RNDU);
        mpfr_add(num.x, num.x, term.x, MPFR_RNDU);
        mpfr_abs(bm.x, o.mid_, MPFR_RNDD);
        mpfr_mul(den.x, ly.x, bm.x, MPFR_RNDD);
        mpfr_div(r.rad_, num.x, den.x, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall inverse() const { return exact_long(1, prec_) / *this; }

    RealBall sqrt() const {
        RealBall r(prec_);
        detail::MpfrTmp lx(prec_), hx(prec_);
        lower(lx.x);
        upper(hx.x);
        if (mpfr_sgn(hx.x) < 0) throw DomainError("sqrt of negative ball");
        if (mpfr_sgn(lx.x) > 0) {
            int tern = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
            /* |sqrt x - sqrt mx| <= rx / (sqrt lx + sqrt mx) */
            detail::MpfrTmp sl(detail::kRadiusPrec), sm(detail::kRadiusPrec);
            mpfr_sqrt(sl.x, lx.x, MPFR_RNDD);
            mpfr_sqrt(sm.x, mid_, MPFR_RNDD);
            mpfr_add(sl.x, sl.x, sm.x, MPFR_RNDD);
            mpfr_div(r.rad_, rad_, sl.x, MPFR_RNDU);
            r.bump_ulp(tern);
        } else {
            /* interval touches 0: image inside [0, sqrt(hx)] */
            detail::MpfrTmp sh(prec_);
            mpfr_sqrt(sh.x, hx.x, MPFR_RNDU);
            mpfr_div_2ui(r.mid_, sh.x, 1, MPFR_RNDN);
            mpfr_div_2ui(sh.x, sh.x, 1, MPFR_RNDU);
            mpfr_set(r.rad_, sh.x, MPFR_RNDU);
            r.bump_ulp(1);
        }
        return r;
    }

    RealBall exp() const {
        RealBall r(prec_);
        int tern = mpfr_exp(r.mid_, mid_, MPFR_RNDN);
        detail::MpfrTmp hx(prec_), eh(prec_);
        upper(hx.x);
        mpfr_exp(eh.x, hx.x, MPFR_RNDU);
        mpfr_mul(r.rad_, rad_, eh.x, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall log() const {
        RealBall r(prec_);
        detail::MpfrTmp lx(prec_);
        lower(lx.x);
        if (mpfr_sgn(lx.x) <= 0) throw DomainError("log of ball touching (-inf, 0]");
        int tern = mpfr_log(r.mid_, mid_, MPFR_RNDN);
        mpfr_div(r.rad_, rad_, lx.x, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    /* atan, cos, sin have |f'| <= 1: the input radius carries over. */
    RealBall atan() const {
        RealBall r(prec_);
        int tern = mpfr_atan(r.mid_, mid_, MPFR_RNDN);
        mpfr_set(r.rad_, rad_, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall cos() const {
        RealBall r(prec_);
        int tern = mpfr_cos(r.mid_, mid_, MPFR_RNDN);
        mpfr_set(r.rad_, rad_, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall sin() const {
        RealBall r(prec_);
        int tern = mpfr_sin(r.mid_, mid_, MPFR_RNDN);
        mpfr_set(r.rad_, rad_, MPFR_RNDU);
        r.bump_ulp(tern);
        return r;
    }

    RealBall pow_ui(unsigned long e) const {
        RealBall acc = exact_long(1, prec_);
        RealBall base(*this);
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    static RealBall hull(const RealBall& a, const RealBall& b) {
        Prec prec = std::max(a.prec_, b.prec_);
        detail::MpfrTmp lo(prec), hi(prec), t(prec);
        a.lower(lo.x);
        b.lower(t.x);
        mpfr_min(lo.x, lo.x, t.x, MPFR_RNDD);
        a.upper(hi.x);
        b.upper(t.x);
        mpfr_max(hi.x, hi.x, t.x, MPFR_RNDU);
        RealBall r(prec);
        mpfr_add(r.mid_, lo.x, hi.x, MPFR_RNDN);
        mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
        detail::MpfrTmp d(detail::kRadiusPrec);
        mpfr_sub(d.x, hi.x, r.mid_, MPFR_RNDU);
        mpfr_set(r.rad_, d.x, MPFR_RNDU);
        mpfr_sub(d.x, r.mid_, lo.x, MPFR_RNDU);
        mpfr_max(r.rad_, r.rad_, d.x, MPFR_RNDU);
        return r;
    }

    /* the midpoint as an exact (radius-zero) ball */
    RealBall midpoint_exact() const {
        RealBall r(*this);
        mpfr_set_zero(r.rad_, 1);
        return r;
    }

    /* widen the radius by |extra| (upper bound of the extra ball) */
    RealBall widened(const RealBall& extra) const {
        RealBall r(*this);
        detail::MpfrTmp e(detail::kRadiusPrec), a(detail::kRadiusPrec);
        mpfr_abs(a.x, extra.mid_, MPFR_RNDU);
        mpfr_add(e.x, a.x, extra.rad_, MPFR_RNDU);
        mpfr_add(r.rad_, r.rad_, e.x, MPFR_RNDU);
        return r;
    }

    std::string to_string(std::size_t digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid_);
        std::string midstr(s);
        mpfr_free_str(s);
        mpfr_asprintf(&s, "%.3Rg", rad_);
        std::string radstr(s);
        mpfr_free_str(s);
        return midstr + " +/- " + radstr;
    }

private:
    /* absorb a rounding of the midpoint into the radius */
    void bump_ulp(int ternary) {
        if (ternary == 0) return;
        detail::MpfrTmp u(detail::kRadiusPrec);
        if (mpfr_zero_p(mid_)) {
            mpfr_set_ui_2exp(u.x, 1, mpfr_get_emin() + 2, MPFR_RNDU);
        } else {
            mpfr_set_ui_2exp(u.x, 1, mpfr_get_exp(mid_) - prec_ + 1, MPFR_RNDU);
        }
        mpfr_add(rad_, rad_, u.x, MPFR_RNDU);
    }

    Prec prec_;
    mpfr_t mid_;
    mpfr_t rad_;
};

/* Horner evaluation of an integer polynomial on a ball. */
inline RealBall evaluate(const IntPolynomial& p, const RealBall& x) {
    RealBall acc = RealBall::exact_long(0, x.precision());
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * x + RealBall::exact_int(p[static_cast<std::size_t>(i)], x.precision());
    }
    return acc;
}

} // namespace salem

#endif
