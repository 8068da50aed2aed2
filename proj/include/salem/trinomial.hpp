/* Roots of G_n(x) = -1 + x + x^n: the real root theta_n in (0,1), certified
 * complex root balls ordered by argument, sector counts, the limited
 * expansions D(.) with terminant checks, and the n mod 6 classification. */
#ifndef SALEM_TRINOMIAL_HPP
#define SALEM_TRINOMIAL_HPP

#include <complex>
#include <optional>
#include <vector>

#include "salem/algebraic_number.hpp"
#include "salem/complex_ball.hpp"

namespace salem {

inline IntPolynomial trinomial_g(unsigned long n) {
    require(n >= 2, "G_n needs n >= 2");
    std::vector<Int> c(n + 1);
    c[0] = -1;
    c[1] = 1;
    c[n] = 1;
    return IntPolynomial{std::move(c)};
}

/* x^n - x^{n-1} - 1: the reciprocal of G_n, normalized monic. */
inline IntPolynomial trinomial_g_reciprocal(unsigned long n) {
    require(n >= 2, "G_n* needs n >= 2");
    std::vector<Int> c(n + 1);
    c[0] = -1;
    c[n - 1] = -1;
    c[n] = 1;
    return IntPolynomial{std::move(c)};
}

inline AlgebraicNumber theta_n(unsigned long n) {
    auto iv = isolate_real_roots(trinomial_g(n), Rat(0), Rat(1));
    require(iv.size() == 1, "G_n must have exactly one root in (0,1)");
    return AlgebraicNumber(trinomial_g(n), iv[0].first, iv[0].second, true);
}

inline AlgebraicNumber theta_n_inverse(unsigned long n) {
    return AlgebraicNumber(trinomial_g_reciprocal(n), Rat(1), Rat(2), true);
}

enum class TrinomialClass { Irreducible, CyclotomicFactorX2mX1 };

inline TrinomialClass irreducibility_class(unsigned long n) {
    require(n >= 2, "irreducibility_class needs n >= 2");
    const IntPolynomial phi6{1, -1, 1};
    bool divisible = trinomial_g(n).divide_exact(phi6).has_value();
    bool is5mod6 = (n % 6 == 5);
    require(divisible == is5mod6, "n mod 6 rule contradicts exact trial division");
    return is5mod6 ? TrinomialClass::CyclotomicFactorX2mX1 : TrinomialClass::Irreducible;
}

/* Disk-Newton certification: with F' = f'(D) excluding 0 and c - f(c)/F'
 * contained in the open disk D(mid c, r), the disk holds exactly one simple
 * zero of f. Rectangles enclosing the disk are used throughout, which only
 * makes F' wider. */
template <typename FEval, typename FPrimeEval>
bool certify_simple_root(const FEval& f, const FPrimeEval& fp, const ComplexBall& center,
                         double radius) {
    Prec prec = center.precision();
    RealBall r = RealBall::from_double(radius, prec);
    ComplexBall disk(center.re.widened(r), center.im.widened(r));
    ComplexBall dfd = fp(disk);
    if (dfd.contains_zero()) return false;
    ComplexBall q = f(center) / dfd;
    return q.abs().upper_d() + center.radius_bound().upper_d() < radius;
}

struct TrinomialRootSet {
    unsigned long n = 0;
    AlgebraicNumber theta;
    RealBall theta_ball;
    /* z_{j,n}, j = 1..floor(n/2) with strictly increasing argument; for even
     * n the last entry is the real root < -1 (argument pi). */
    std::vector<ComplexBall> upper;
    Prec prec = 0;

    /* index (1-based) of the exact e^{i pi/3} cyclotomic root when n = 5 mod 6 */
    std::optional<std::size_t> cyclotomic_index;
};

namespace detail {

inline std::vector<std::complex<double>> aberth_trinomial(unsigned long n) {
    using C = std::complex<double>;
    const double nn = static_cast<double>(n);
    auto p = [nn](C z) { return std::pow(z, nn) + z - 1.0; };
    auto dp = [nn](C z) { return nn * std::pow(z, nn - 1.0) + 1.0; };
    std::vector<C> z(n);
    for (unsigned long j = 0; j < n; ++j) {
        double ang = 2.0 * 3.14159265358979323846 * (static_cast<double>(j) + 0.3) / nn;
        z[j] = std::polar(0.97, ang);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (unsigned long i = 0; i < n; ++i) {
            C w = p(z[i]) / dp(z[i]);
            C s = 0.0;
            for (unsigned long j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            C corr = w / (1.0 - w * s);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

} // namespace detail

/* All n roots certified: theta_n exactly, the rest as disjoint simple-root
 * disks indexed by strictly increasing argument. */
inline TrinomialRootSet all_roots(unsigned long n, double target_radius = 1e-12,
                                  Prec prec = 128) {
    require(n >= 2, "all_roots needs n >= 2");
    auto approx = detail::aberth_trinomial(n);

    AlgebraicNumber th = theta_n(n);
    TrinomialRootSet out{n, th, th.enclosure(prec), {}, prec, std::nullopt};

    std::vector<std::complex<double>> uppers;
    for (auto& z : approx) {
        if (z.imag() > 1e-9) uppers.push_back(z);
        if (n % 2 == 0 && std::abs(z.imag()) <= 1e-9 && z.real() < -0.5)
            uppers.push_back({z.real(), 0.0});
    }
    std::sort(uppers.begin(), uppers.end(),
              [](auto a, auto b) { return std::arg(a) < std::arg(b); });
    require(uppers.size() == n / 2, "upper half-plane root count mismatch");

    auto f = [n](const ComplexBall& w) { return evaluate_trinomial(n, w); };
    auto fp = [n](const ComplexBall& w) { return evaluate_trinomial_derivative(n, w); };

    for (auto seed : uppers) {
        Prec p2 = prec;
        ComplexBall c = ComplexBall::from_doubles(seed.real(), seed.imag(), p2);
        bool ok = false;
        double r = target_radius;
        for (int attempt = 0; attempt < 10 && !ok; ++attempt) {
            for (int step = 0; step < 4; ++step)
                c = (c - f(c) / fp(c)).midpoint_exact();
            if (certify_simple_root(f, fp, c, r)) {
                ok = true;
                break;
            }
            if (attempt % 2 == 1)
                r *= 8;  // relax the disk before escalating precision again
            else
                p2 *= 2;
        }
        require(ok, "trinomial root certification failed");
        RealBall rr = RealBall::from_double(r, p2);
        out.upper.emplace_back(c.re.widened(rr), c.im.widened(rr));
    }

    for (std::size_t i = 0; i < out.upper.size(); ++i)
        for (std::size_t j = i + 1; j < out.upper.size(); ++j) {
            auto a = out.upper[i].mid_d(), b = out.upper[j].mid_d();
            double ra = out.upper[i].radius_bound().upper_d();
            double rb = out.upper[j].radius_bound().upper_d();
            require(std::abs(a - b) > ra + rb, "root balls overlap");
        }

    if (n % 6 == 5) {
        /* locate the exact e^{i pi/3} root of the x^2 - x + 1 factor */
        RealBall half = RealBall::from_rational(Rat(1, 2), prec);
        RealBall s3h = (RealBall::exact_long(3, prec).sqrt()) * half;
        for (std::size_t j = 0; j < out.upper.size(); ++j) {
            const auto& z = out.upper[j];
            if (z.re.contains(half) && z.im.contains(s3h)) {
                out.cyclotomic_index = j + 1;
                break;
            }
        }
        require(out.cyclotomic_index.has_value(),
                "n = 5 mod 6 but no ball encloses e^{i pi/3}");
    }
    return out;
}

inline const ComplexBall& first_root(const TrinomialRootSet& rs) {
    require(!rs.upper.empty(), "no z_{1,n} for n < 2");
    return rs.upper.front();
}

enum class Verdict { Certified, Failed, Inconclusive };

struct SectorCountResult {
    unsigned long n;
    int count = 0;            // certified number of roots with |arg z| < pi/3
    int expected = 0;         // 1 + 2 floor(n/6)
    Verdict verdict = Verdict::Inconclusive;
};

/* Count roots in the open sector |arg z| < pi/3. theta_n counts once; each
 * certified upper root with sqrt(3) Re - Im > 0 and Re > 0 counts twice.
 * The exact boundary pair for n = 5 mod 6 is excluded exactly. */
inline SectorCountResult sector_count(unsigned long n, Prec prec = 128) {
    TrinomialRootSet rs = all_roots(n, 1e-12, prec);
    SectorCountResult res{n, 1, 1 + 2 * static_cast<int>(n / 6), Verdict::Certified};
    RealBall s3 = RealBall::exact_long(3, prec).sqrt();
    for (std::size_t j = 0; j < rs.upper.size(); ++j) {
        if (rs.cyclotomic_index && *rs.cyclotomic_index == j + 1) continue;  // arg exactly pi/3
        const auto& z = rs.upper[j];
        RealBall margin = s3 * z.re - z.im;
        int s = margin.sign_certain();
        int sr = z.re.sign_certain();
        if (s == 0 || (s > 0 && sr == 0)) {
            res.verdict = Verdict::Inconclusive;
            continue;
        }
        if (s > 0 && sr > 0) res.count += 2;
    }
    return res;
}

struct IndexModulusReport {
    unsigned long n;
    bool equivalence_holds = true;   // j <= floor(n/6) <=> Re > 1/2 <=> |z| < 1
    bool modulus_ordering_holds = true;  // theta < |z_1| and |z_j| < |z_{j+1}|, j < floor(n/6)
    Verdict verdict = Verdict::Certified;
};

inline IndexModulusReport index_modulus_correlation(unsigned long n, Prec prec = 160) {
    require(n >= 6, "index_modulus_correlation needs n >= 6");
    TrinomialRootSet rs = all_roots(n, 1e-20, prec);
    IndexModulusReport rep{n};
    const std::size_t inner = n / 6;
    RealBall one = RealBall::exact_long(1, prec);
    RealBall half = RealBall::from_rational(Rat(1, 2), prec);
    for (std::size_t j = 1; j <= rs.upper.size(); ++j) {
        const auto& z = rs.upper[j - 1];
        bool boundary = rs.cyclotomic_index && *rs.cyclotomic_index == j;
        bool inside_claim = j <= inner;
        if (boundary) {
            /* exact: Re = 1/2 and |z| = 1, so both strict conditions fail */
            if (inside_claim) rep.equivalence_holds = false;
            continue;
        }
        RealBall re_m = z.re - half;
        RealBall mod_m = z.abs() - one;
        int sre = re_m.sign_certain();
        int smod = mod_m.sign_certain();
        if (sre == 0 || smod == 0) {
            rep.verdict = Verdict::Inconclusive;
            continue;
        }
        bool re_gt = sre > 0;
        bool mod_lt = smod < 0;
        if (re_gt != inside_claim || mod_lt != inside_claim) rep.equivalence_holds = false;
    }
    /* Prop 4.2 (iii): theta_n strictly smallest, then increasing within the lenticulus */
    RealBall prev = rs.theta_ball;
    for (std::size_t j = 1; j <= inner && j <= rs.upper.size(); ++j) {
        RealBall m = rs.upper[j - 1].abs();
        if (!prev.certainly_less(m)) {
            rep.verdict = Verdict::Inconclusive;
            rep.modulus_ordering_holds = false;
        }
        prev = m;
    }
    return rep;
}

/* ---- limited expansions and terminant bounds ---- */

struct AsymptoticReport {
    unsigned long n = 0;

    double theta = 0, d_theta = 0, dev_theta = 0, bound_theta = 0;   // constant 1/2
    bool theta_within = false;

    double lambda_n = 0, d_lambda = 0, dev_lambda = 0, bound_lambda = 0;  // constant 1
    bool lambda_within = false;

    /* z_{1,n} parts: the paper states no constant for these terminants; the
     * report carries the deviation, the bound evaluated with constant 1 and
     * the ratio, without asserting. */
    double re_z1 = 0, d_re_z1 = 0, dev_re = 0, bound_re_c1 = 0, ratio_re = 0;
    double im_z1 = 0, d_im_z1 = 0, dev_im = 0, bound_im_c1 = 0, ratio_im = 0;
    bool has_z1 = false;

    double modulus_z1 = 0, d_modulus_z1 = 0, dev_modulus = 0;  // Eq-style first order
};

namespace detail {

struct LogPack {
    RealBall L, LL, nb, one;
};

inline LogPack logs(unsigned long n, Prec prec) {
    RealBall nb = RealBall::exact_long(static_cast<long>(n), prec);
    RealBall L = nb.log();
    RealBall LL = L.log();
    return {L, LL, nb, RealBall::exact_long(1, prec)};
}

/* D(theta_n) = 1 - (L/n)(1 - ((n-L)/(nL+n-L)) (LL - n Log(1 - L/n) - L)) */
inline RealBall d_theta(unsigned long n, Prec prec) {
    auto [L, LL, nb, one] = logs(n, prec);
    RealBall num = nb - L;
    RealBall den = nb * L + nb - L;
    RealBall inner = LL - nb * ((one - L / nb).log()) - L;
    return one - (L / nb) * (one - (num / den) * inner);
}

inline RealBall lambda_from_dtheta(unsigned long n, const RealBall& dth, Prec prec) {
    auto [L, LL, nb, one] = logs(n, prec);
    return one - (one - dth) * nb / L;
}

inline RealBall d_lambda(unsigned long n, Prec prec) {
    auto [L, LL, nb, one] = logs(n, prec);
    return (LL / L) * (one / (one + one / L));
}

} // namespace detail

inline AsymptoticReport asymptotic_report(unsigned long n, Prec prec = 192) {
    require(n >= 2, "asymptotic_report needs n >= 2");
    AsymptoticReport rep;
    rep.n = n;
    auto [L, LL, nb, one] = detail::logs(n, prec);

    RealBall th = theta_n(n).enclosure(prec);
    RealBall dth = detail::d_theta(n, prec);
    RealBall dev_t = (th - dth).abs();
    RealBall bt = (one / (nb * 2)) * (LL / L) * (LL / L);
    rep.theta = th.mid_d();
    rep.d_theta = dth.mid_d();
    rep.dev_theta = dev_t.upper_d();
    rep.bound_theta = bt.lower_d();
    rep.theta_within = dev_t.certainly_less(bt);

    RealBall lam = detail::lambda_from_dtheta(n, dth, prec);
    RealBall dlam = detail::d_lambda(n, prec);
    RealBall dev_l = (lam - dlam).abs();
    RealBall bl = LL / nb;
    rep.lambda_n = lam.mid_d();
    rep.d_lambda = dlam.mid_d();
    rep.dev_lambda = dev_l.upper_d();
    rep.bound_lambda = bl.lower_d();
    rep.lambda_within = dev_l.certainly_less(bl);

    if (n >= 18) {
        TrinomialRootSet rs = all_roots(n, 1e-25, prec);
        const ComplexBall& z1 = first_root(rs);
        RealBall pi2 = RealBall::pi(prec) * RealBall::pi(prec);
        RealBall two = RealBall::exact_long(2, prec);

        RealBall dre = th + (two * pi2 / nb) * (one / L) * (one / L) * (one + two * lam);
        RealBall dev_re = (z1.re - dre).abs();
        RealBall bre = (one / (nb * L)) * (one / L) * (one / L) * (LL / L) * (LL / L);
        rep.re_z1 = z1.re.mid_d();
        rep.d_re_z1 = dre.mid_d();
        rep.dev_re = dev_re.upper_d();
        rep.bound_re_c1 = bre.mid_d();
        rep.ratio_re = rep.dev_re / rep.bound_re_c1;

        RealBall dim = (two * RealBall::pi(prec) / nb) * (one - (one / L) * (one + lam));
        RealBall dev_im = (z1.im - dim).abs();
        RealBall bim = (one / (nb * L)) * (one / L) * (LL / L) * (LL / L);
        rep.im_z1 = z1.im.mid_d();
        rep.d_im_z1 = dim.mid_d();
        rep.dev_im = dev_im.upper_d();
        rep.bound_im_c1 = bim.mid_d();
        rep.ratio_im = rep.dev_im / rep.bound_im_c1;

        RealBall mod = z1.abs();
        RealBall dmod = one - (L - LL) / nb;
        rep.modulus_z1 = mod.mid_d();
        rep.d_modulus_z1 = dmod.mid_d();
        rep.dev_modulus = (mod - dmod).abs().upper_d();
        rep.has_z1 = true;
    }
    return rep;
}

/* Moduli bound of Prop 4.2 (i): every root of G_n has modulus inside
 * [1 - 2 Log n / n, 1 + 2 Log 2 / n]. Certified over the root set. */
inline bool moduli_bound_holds(const TrinomialRootSet& rs, Prec prec = 128) {
    auto [L, LL, nb, one] = detail::logs(rs.n, prec);
    RealBall lo = one - (L * 2) / nb;
    RealBall hi = one + (RealBall::exact_long(2, prec).log() * 2) / nb;
    auto inside = [&](const RealBall& m) {
        return lo.certainly_less(m) && m.certainly_less(hi);
    };
    if (!inside(rs.theta_ball)) return false;
    for (const auto& z : rs.upper)
        if (!inside(z.abs())) return false;
    return true;
}

} // namespace salem

#endif
