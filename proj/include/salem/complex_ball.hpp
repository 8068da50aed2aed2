/* Complex balls as rectangular products of two real balls. */
#ifndef SALEM_COMPLEX_BALL_HPP
#define SALEM_COMPLEX_BALL_HPP

#include <complex>

#include "salem/real_ball.hpp"

namespace salem {

class ComplexBall {
public:
    RealBall re;
    RealBall im;

    explicit ComplexBall(Prec prec = 64) : re(prec), im(prec) {}
    ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexBall exact_long(long r, long i, Prec prec) {
        return {RealBall::exact_long(r, prec), RealBall::exact_long(i, prec)};
    }

    static ComplexBall from_doubles(double r, double i, Prec prec) {
        return {RealBall::from_double(r, prec), RealBall::from_double(i, prec)};
    }

    static ComplexBall from_real(RealBall r) {
        Prec p = r.precision();
        return {std::move(r), RealBall::exact_long(0, p)};
    }

    Prec precision() const { return std::max(re.precision(), im.precision()); }

    std::complex<double> mid_d() const { return {re.mid_d(), im.mid_d()}; }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool nonzero_certain() const { return !contains_zero(); }

    ComplexBall operator-() const { return {-re, -im}; }
    ComplexBall conj() const { return {re, -im}; }

    ComplexBall operator+(const ComplexBall& o) const { return {re + o.re, im + o.im}; }
    ComplexBall operator-(const ComplexBall& o) const { return {re - o.re, im - o.im}; }

    ComplexBall operator*(const ComplexBall& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    ComplexBall operator*(const RealBall& s) const { return {re * s, im * s}; }

    RealBall abs2() const { return re * re + im * im; }
    RealBall abs() const { return abs2().sqrt(); }

    ComplexBall operator/(const ComplexBall& o) const {
        RealBall d = o.abs2();
        ComplexBall num = *this * o.conj();
        return {num.re / d, num.im / d};
    }

    ComplexBall pow_ui(unsigned long e) const {
        ComplexBall acc = exact_long(1, 0, precision());
        ComplexBall base(*this);
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    ComplexBall midpoint_exact() const { return {re.midpoint_exact(), im.midpoint_exact()}; }

    /* Upper bound of the distance of any point of the ball to the midpoint. */
    RealBall radius_bound() const {
        RealBall rr(precision());
        RealBall a = RealBall::from_double(re.rad_d(), 64);
        RealBall b = RealBall::from_double(im.rad_d(), 64);
        /* rad_d rounds up, so a,b dominate the true radii */
        return (a * a + b * b).sqrt();
    }

    static ComplexBall hull(const ComplexBall& a, const ComplexBall& b) {
        return {RealBall::hull(a.re, b.re), RealBall::hull(a.im, b.im)};
    }

    std::string to_string(std::size_t digits = 20) const {
        return "(" + re.to_string(digits) + ", " + im.to_string(digits) + ")";
    }
};

inline ComplexBall evaluate(const IntPolynomial& p, const ComplexBall& z) {
    ComplexBall acc = ComplexBall::exact_long(0, 0, z.precision());
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * z;
        acc.re = acc.re + RealBall::exact_int(p[static_cast<std::size_t>(i)], z.precision());
    }
    return acc;
}

/* G_n(z) = -1 + z + z^n and its derivative, by binary powering: O(log n)
 * ball operations instead of a length-n Horner chain. */
inline ComplexBall evaluate_trinomial(unsigned long n, const ComplexBall& z) {
    ComplexBall zn = z.pow_ui(n);
    ComplexBall r = z + zn;
    r.re = r.re - RealBall::exact_long(1, z.precision());
    return r;
}

inline ComplexBall evaluate_trinomial_derivative(unsigned long n, const ComplexBall& z) {
    ComplexBall r = z.pow_ui(n - 1) * RealBall::exact_long(static_cast<long>(n), z.precision());
    r.re = r.re + RealBall::exact_long(1, z.precision());
    return r;
}

} // namespace salem

#endif
