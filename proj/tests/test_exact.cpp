#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wptri/exact.hpp"

using namespace wptri;

TEST_CASE("extended gcd on the worked pairs") {
    GcdExt e = gcd_ext(19, 12);
    CHECK(e.g == 1);
    CHECK(BigInt(19) * e.x + BigInt(12) * e.y == 1);

    e = gcd_ext(0, 0);
    CHECK(e.g == 0);

    e = gcd_ext(1235, 6545);
    CHECK(e.g == 5);
    CHECK(BigInt(1235) * e.x + BigInt(6545) * e.y == 5);
}

TEST_CASE("extended gcd identity on random 128-bit operands") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        BigInt a = BigInt((unsigned long)rng()) * BigInt((unsigned long)rng());
        BigInt b = BigInt((unsigned long)rng()) * BigInt((unsigned long)rng());
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        GcdExt e = gcd_ext(a, b);
        CHECK(a * e.x + b * e.y == e.g);
        CHECK(e.g >= 0);
        if (e.g != 0) {
            CHECK(a % e.g == 0);
            CHECK(b % e.g == 0);
        }
    }
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(7, 19) == 11);
    CHECK(mod_inverse(13, 19) == 3);
    CHECK(mod_inverse(1, 2) == 1);
    CHECK(mod_inverse(1, 997) == 1);
    CHECK(mod_inverse(5, 1) == 0);
    CHECK_THROWS_AS(mod_inverse(6, 9), NotCoprimeError);
    CHECK_THROWS_AS(mod_inverse(0, 7), NotCoprimeError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        BigInt m = (unsigned long)(rng() % 100000 + 2);
        BigInt a = (unsigned long)(rng() % 1000000);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        if (g != 1) continue;
        BigInt inv = mod_inverse(a, m);
        CHECK(inv >= 0);
        CHECK(inv < m);
        CHECK(canonical_residue(a * inv, m) == 1);
    }
}

TEST_CASE("canonical residue, including negatives") {
    CHECK(canonical_residue(1528, 19) == 8);
    CHECK(canonical_residue(-8, 19) == 11);
    CHECK(canonical_residue(0, 5) == 0);
    CHECK(canonical_residue(-19, 19) == 0);
    CHECK(canonical_residue(BigInt("-123456789123456789123456789"), 1) == 0);
}

TEST_CASE("fractional part") {
    CHECK(frac_part(Rational(8, 12)) == Rational(2, 3));
    CHECK(frac_part(Rational(-3, 5)) == Rational(2, 5));
    CHECK(frac_part(Rational(7)) == Rational(0));
    CHECK(frac_part(Rational(-22, 7)) == Rational(6, 7));

    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Rational x(BigInt((long)(rng() % 2000001)) - 1000000,
                   BigInt((long)(rng() % 999 + 1)));
        Rational f = frac_part(x);
        CHECK(f >= Rational(0));
        CHECK(f < Rational(1));
        CHECK(Rational(x.floor()) + f == x);
        CHECK((x - f).is_integer());
    }
}

TEST_CASE("rationals stay canonical") {
    Rational x(6, -4);
    CHECK(x.num() == -3);
    CHECK(x.den() == 2);
    CHECK(x.str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(-9635, 4389) == Rational(-9635 * 7, 4389 * 7));
    CHECK(Rational(70).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), InvalidTypeError);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        auto draw = [&rng] {
            return Rational(BigInt((long)(rng() % 20001)) - 10000,
                            BigInt((long)(rng() % 500 + 1)));
        };
        Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        Rational s = a + b * c;
        CHECK(s.den() > 0);
        BigInt g;
        BigInt n = s.num() < 0 ? BigInt(-s.num()) : s.num();
        BigInt d = s.den();
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        CHECK(g == 1);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
