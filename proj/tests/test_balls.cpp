#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "salem/complex_ball.hpp"
#include "salem/real_ball.hpp"

using namespace salem;

TEST_CASE("exact integers stay exact through ring ops") {
    RealBall a = RealBall::exact_long(3, 64);
    RealBall b = RealBall::exact_long(-7, 64);
    CHECK((a * b).is_exact());
    CHECK((a + b).sign_certain() == -1);
    CHECK((a * b + a * a).contains_zero() == false);
}

TEST_CASE("division excludes zero divisor intervals") {
    RealBall one = RealBall::exact_long(1, 64);
    RealBall tiny = RealBall::from_interval(Rat(-1, 100), Rat(1, 100), 64);
    CHECK_THROWS_AS(one / tiny, DomainError);
}

/* Ball arithmetic soundness: exact rational evaluation lies inside the ball
 * for random rational inputs and random polynomial expressions. */
TEST_CASE("soundness against exact rational arithmetic") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 2000; ++trial) {
        Rat x(num(rng), den(rng));
        std::vector<Int> c;
        for (int i = 0; i <= 6; ++i) c.emplace_back(coef(rng));
        IntPolynomial p{std::move(c)};
        Rat exact = p.evaluate(x);
        RealBall bx = RealBall::from_rational(x, 64);
        RealBall val = evaluate(p, bx);
        detail::MpfrTmp lo(64), hi(64);
        val.lower(lo.x);
        val.upper(hi.x);
        CHECK(mpfr_cmp_q(lo.x, exact.get_mpq_t()) <= 0);
        CHECK(mpfr_cmp_q(hi.x, exact.get_mpq_t()) >= 0);
    }
}

TEST_CASE("sqrt log exp enclose known values") {
    RealBall two = RealBall::exact_long(2, 128);
    RealBall s = two.sqrt();
    RealBall square = s * s;
    detail::MpfrTmp lo(128), hi(128);
    square.lower(lo.x);
    square.upper(hi.x);
    CHECK(mpfr_cmp_ui(lo.x, 2) <= 0);
    CHECK(mpfr_cmp_ui(hi.x, 2) >= 0);

    RealBall e = RealBall::exact_long(1, 128).exp();
    RealBall back = e.log();
    CHECK(back.contains(RealBall::exact_long(1, 128)));
    RealBall diff = back - RealBall::exact_long(1, 128);
    CHECK(diff.contains_zero());
    CHECK(diff.rad_d() < 1e-30);
}

TEST_CASE("pow_ui matches repeated multiplication") {
    RealBall x = RealBall::from_rational(Rat(7, 5), 96);
    RealBall p = x.pow_ui(11);
    Rat exact = 1;
    for (int i = 0; i < 11; ++i) exact *= Rat(7, 5);
    detail::MpfrTmp lo(96), hi(96);
    p.lower(lo.x);
    p.upper(hi.x);
    CHECK(mpfr_cmp_q(lo.x, exact.get_mpq_t()) <= 0);
    CHECK(mpfr_cmp_q(hi.x, exact.get_mpq_t()) >= 0);
}

TEST_CASE("complex ball multiplication and modulus") {
    ComplexBall i = ComplexBall::exact_long(0, 1, 64);
    ComplexBall m = i * i;
    CHECK(m.re.sign_certain() == -1);
    CHECK(m.im.contains_zero());

    ComplexBall z = ComplexBall::from_doubles(3.0, 4.0, 64);
    RealBall r = z.abs();
    CHECK(r.certainly_greater(4.999));
    CHECK(r.certainly_less(5.001));
}

TEST_CASE("trinomial evaluation agrees with direct polynomial") {
    IntPolynomial g12{-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int t = 0; t < 50; ++t) {
        ComplexBall z = ComplexBall::from_doubles(u(rng), u(rng), 96);
        ComplexBall a = evaluate(g12, z);
        ComplexBall b = evaluate_trinomial(12, z);
        CHECK((a - b).contains_zero());
    }
}

TEST_CASE("hull contains both operands") {
    RealBall a = RealBall::from_rational(Rat(1, 3), 64);
    RealBall b = RealBall::from_rational(Rat(2, 3), 64);
    RealBall h = RealBall::hull(a, b);
    CHECK(h.contains(a));
    CHECK(h.contains(b));
}
