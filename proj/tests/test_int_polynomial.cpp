#include <catch2/catch_amalgamated.hpp>

#include <random>
#include "salem/int_polynomial.hpp"

using namespace salem;

namespace {
const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
}

TEST_CASE("reciprocal basics") {
    CHECK(kLehmer.reciprocal() == kLehmer);
    CHECK(IntPolynomial{-2, 1}.reciprocal() == IntPolynomial{1, -2});
    /* -1 + x + x^5  ->  1 + x^4 - x^5 */
    CHECK(IntPolynomial{-1, 1, 0, 0, 0, 1}.reciprocal() == IntPolynomial{1, 0, 0, 0, 1, -1});
    CHECK_THROWS_AS(IntPolynomial::zero().reciprocal(), DomainError);
}

TEST_CASE("reciprocal is an involution when p(0) != 0") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> c;
        c.emplace_back(coef(rng) * 2 + 1);  // nonzero constant term
        int deg = 1 + trial % 9;
        for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
        IntPolynomial p{std::move(c)};
        if (p.degree() < 1) continue;
        CHECK(p.reciprocal().reciprocal() == p);
    }
}

TEST_CASE("is_reciprocal") {
    CHECK(kLehmer.is_reciprocal());
    CHECK_FALSE(IntPolynomial{-1, -1, 0, 1}.is_reciprocal());  // x^3 - x - 1
    CHECK(IntPolynomial{1}.is_reciprocal());
}

TEST_CASE("descartes sign changes") {
    CHECK(descartes_sign_changes({Int(-1), Int(1), Int(1)}) == 1);
    CHECK(descartes_sign_changes({Int(1), Int(-2), Int(1)}) == 2);
    CHECK(descartes_sign_changes({Int(-1), Int(0), Int(1), Int(0), Int(1)}) == 1);
    /* an f_beta coefficient prefix: -1 then 0/1 digits */
    CHECK(descartes_sign_changes(IntPolynomial{-1, 1, 0, 0, 1, 0, 1}) == 1);
}

TEST_CASE("poly_gcd") {
    IntPolynomial a{-1, 0, 1};         // x^2 - 1
    IntPolynomial b{-1, 0, 0, 1};      // x^3 - 1
    CHECK(poly_gcd(a, b) == IntPolynomial{-1, 1});
    CHECK(poly_gcd(kLehmer, kLehmer) == kLehmer);
    IntPolynomial c = a * b;
    CHECK(poly_gcd(c, a) == a);
    CHECK_THROWS_AS(poly_gcd(IntPolynomial::zero(), IntPolynomial::zero()), DomainError);
}

TEST_CASE("exact division") {
    IntPolynomial a{-1, 0, 1};
    IntPolynomial b{1, 1};
    auto q = a.divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == IntPolynomial{-1, 1});
    CHECK_FALSE(IntPolynomial{1, 1, 1}.divide_exact(b).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic(2) == IntPolynomial{1, 1});
    CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
    /* product over divisors reconstructs x^n - 1 */
    for (unsigned long n : {4ul, 9ul, 30ul}) {
        IntPolynomial prod = IntPolynomial::one();
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        std::vector<Int> xn(n + 1);
        xn[0] = -1;
        xn[n] = 1;
        CHECK(prod == IntPolynomial{std::move(xn)});
    }
}

TEST_CASE("factor_abc on G_n sections") {
    /* G_5 = -1 + x + x^5: n = 5 mod 6, cyclotomic factor x^2 - x + 1 */
    IntPolynomial g5{-1, 1, 0, 0, 0, 1};
    auto f = factor_abc(g5);
    CHECK(f.A == IntPolynomial{1, -1, 1});
    CHECK(f.B == IntPolynomial::one());
    CHECK(f.C.degree() == 3);
    CHECK(f.A * f.B * f.C == g5);

    /* G_4 is irreducible: everything lands in C */
    IntPolynomial g4{-1, 1, 0, 0, 1};
    auto f4 = factor_abc(g4);
    CHECK(f4.A == IntPolynomial::one());
    CHECK(f4.B == IntPolynomial::one());
    CHECK(f4.C == g4);
}

TEST_CASE("factor_abc invariants on random sections") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        /* build a -1 + x + x^n + ... + x^s section shape */
        int n = 3 + trial % 6;
        std::vector<Int> c(static_cast<std::size_t>(3 * n + 2));
        c[0] = -1;
        c[1] = 1;
        c[static_cast<std::size_t>(n)] = 1;
        std::size_t pos = static_cast<std::size_t>(2 * n - 1 + (rng() % n));
        if (pos < c.size()) c[pos] = 1;
        c.back() = 1;
        IntPolynomial p{std::move(c)};
        auto f = factor_abc(p);
        CHECK(f.A * f.B * f.C == p);
        CHECK((f.A * f.B).is_reciprocal());
        if (f.C.degree() >= 1) CHECK_FALSE(f.C.is_reciprocal());
    }
}

TEST_CASE("text format round trip") {
    std::string lehmer_text = "1 1 0 -1 -1 -1 -1 -1 0 1 1";
    CHECK(poly_from_text(lehmer_text) == kLehmer);
    CHECK(to_text(kLehmer) == lehmer_text);
    CHECK_THROWS_AS(poly_from_text("1 2 x"), ParseError);
    CHECK_THROWS_AS(poly_from_text(""), ParseError);
}

TEST_CASE("height conventions") {
    IntPolynomial p{1, -3, 5, 1};
    CHECK(p.height_full() == 5);
    CHECK(p.height_interior() == 5);
    CHECK(kLehmer.height_interior() == 1);
    /* interior height is floored at 1 */
    CHECK(IntPolynomial{1, 0, 1}.height_interior() == 1);
}
