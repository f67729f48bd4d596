#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "wptri/ehrhart.hpp"

using namespace wptri;

TEST_CASE("quadratic term") {
    CHECK(quadratic_term(WeightVector(19, 77, 12), 1528) ==
          Rational(312476, 4389));
    CHECK(quadratic_term(WeightVector(5, 7, 9), 0) == Rational(0));
    for (long d = -10; d <= 10; ++d)
        CHECK(quadratic_term(WeightVector(1, 1, 1), d) ==
              Rational(d * (d + 3), 2));
}

TEST_CASE("euler characteristic") {
    WeightVector w(19, 77, 12);
    CHECK(euler_characteristic(w, 1528) == Rational(70));
    CHECK(euler_characteristic(w, 0) == Rational(1));
    CHECK(euler_characteristic(WeightVector(3, 5, 8), 0) == Rational(1));
    CHECK(euler_characteristic(w, -5) == Rational(0));
    CHECK_THROWS_AS(euler_characteristic(WeightVector(2, 4, 5), 3),
                    NotCoprimeError);
}

TEST_CASE("vanishing window, Serre duality and quasi-period") {
    for (const WeightVector& w :
         {WeightVector(19, 77, 12), WeightVector(1, 2, 3),
          WeightVector(2, 3, 5), WeightVector(3, 4, 5)}) {
        BigInt absw = w.abs();
        BigInt bar = w.bar();
        for (BigInt d = -absw + 1; d < 0; ++d)
            CHECK(euler_characteristic(w, d).is_zero());
        for (long d = -150; d <= 150; ++d) {
            Rational chi = euler_characteristic(w, d);
            CHECK(chi.is_integer());
            CHECK(chi == euler_characteristic(w, -absw - d));
            CHECK(euler_characteristic(w, d + bar) - chi ==
                  Rational(d) + Rational(bar + absw, 2));
            CHECK(correction_r_global(w, d) ==
                  correction_r_global(w, d + bar));
        }
    }
}

TEST_CASE("count pipeline") {
    CHECK(count(WeightVector(19, 77, 12), 1528) == 70);
    CHECK(count(WeightVector(1235, 6545, 2652), 1710721) == 70);
    CHECK(count(WeightVector(1, 1, 1), 2) == 6);
    CHECK(count(WeightVector(2, 2, 3), 1) == 0);
    CHECK(count(WeightVector(7, 7, 7), 13) == 0);  // total gcd does not divide
    CHECK(count(WeightVector(7, 7, 7), 14) == 6);  // x + y + z = 2
    CHECK(count(WeightVector(5, 9, 11), -4) == 0);
    CHECK(count(WeightVector(3, 5, 7), 0) == 1);
}

TEST_CASE("virtual genus") {
    for (const WeightVector& w :
         {WeightVector(2, 3, 5), WeightVector(19, 77, 12)})
        CHECK(virtual_genus(w, 0) == Rational(1));
    for (long d = 0; d <= 12; ++d)
        CHECK(virtual_genus(WeightVector(1, 1, 1), d) ==
              Rational((d - 1) * (d - 2), 2));
    // adjunction-style identity against the combinatorial delta
    for (long p = 1; p <= 15; ++p)
        for (long q = 1; q <= 15; ++q)
            for (long r = 0; r <= 10; ++r)
                CHECK(virtual_genus(WeightVector(p, q, 1), q * r + 1) ==
                      delta_comb(p, q, r) - Rational(p + q, 2 * p * q) +
                          Rational(1));
}

TEST_CASE("intersection numbers") {
    WeightVector w(19, 77, 12);
    CHECK(intersection_number(w, 1528, 1528 + 108) == Rational(624952, 4389));
    CHECK(intersection_number(w, 1528, 1528 + 108) ==
          Rational(2) * quadratic_term(w, 1528));
    CHECK(intersection_number(w, 0, 555) == Rational(0));
    CHECK(intersection_number(WeightVector(1, 1, 1), 21, 2) == Rational(42));
}

TEST_CASE("brute-force oracle") {
    CHECK(count_bruteforce(WeightVector(19, 77, 12), 1528) == 70);
    CHECK(count_bruteforce(WeightVector(4, 9, 25), 0) == 1);
    CHECK(count_bruteforce(WeightVector(1, 1, 1), 2) == 6);
    CHECK_THROWS_AS(count_bruteforce(WeightVector(1, 1, 7), 100000000),
                    TooLargeError);
}

TEST_CASE("triple enumeration matches the counter") {
    auto triples = bruteforce_triples(WeightVector(19, 77, 12), 1528);
    CHECK(triples.size() == 70);
    for (const auto& t : triples)
        CHECK(19 * t[0] + 77 * t[1] + 12 * t[2] == 1528);
    CHECK(std::is_sorted(triples.begin(), triples.end()));
}

TEST_CASE("series oracle") {
    CHECK(count_series(WeightVector(19, 77, 12), 1528) == 70);
    for (long d = 0; d <= 30; ++d)
        CHECK(count_series(WeightVector(1, 1, 1), d) ==
              (d + 1) * (d + 2) / 2);
    // frozen from the brute-force oracle
    CHECK(count_bruteforce(WeightVector(2, 3, 5), 10) == 4);
    CHECK(count_series(WeightVector(2, 3, 5), 10) == 4);
    CHECK_THROWS_AS(count_series(WeightVector(1, 2, 3), BigInt("100000000000")),
                    TooLargeError);
}

TEST_CASE("oracle equivalence on random instances") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 600; ++i) {
        WeightVector w(1 + (long)(rng() % 50), 1 + (long)(rng() % 50),
                       1 + (long)(rng() % 50));
        BigInt d = (long)(rng() % 800);
        BigInt brute = count_bruteforce(w, d);
        CHECK(count(w, d) == brute);
        CHECK(count_series(w, d) == brute);
        CHECK(brute >= 0);
    }
}

TEST_CASE("pick area") {
    CHECK(pick_area(6, 4) == Rational(7));
    CHECK(pick_area(0, 3) == Rational(1, 2));
    CHECK(pick_area(61, 9) == Rational(129, 2));
}

namespace {

// closed-form count of a*y + b*z = M, y,z >= 0
BigInt two_coin(const BigInt& M, const BigInt& a, const BigInt& b) {
    if (M < 0) return 0;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (M % g != 0) return 0;
    BigInt a2 = a / g, b2 = b / g, m2 = M / g;
    BigInt y0 = canonical_residue(m2 * mod_inverse(a2, b2), b2);
    if (a2 * y0 > m2) return 0;
    return (m2 - a2 * y0) / (a2 * b2) + 1;
}

// third counting route: sweep one coordinate, close the rest in one formula;
// feasible whenever d/w0 is moderate, with no upper limit on w1, w2, d
BigInt sweep_count(const WeightVector& w, const BigInt& d) {
    BigInt total = 0;
    for (BigInt x = 0; w.w0 * x <= d; ++x)
        total += two_coin(d - w.w0 * x, w.w1, w.w2);
    return total;
}

} // namespace

TEST_CASE("fast count agrees with a closed-form sweep at large scale") {
    struct Case {
        WeightVector w;
        BigInt d;
        long expected; // frozen from the sweep itself
    };
    const Case cases[] = {
        {WeightVector(999983, 1000003, 999979), BigInt("1000000000000"),
         500020},
        {WeightVector(1000000007, 1000000009, 998244353),
         BigInt("50000000000000"), 1},
        {WeightVector(1000000007, 1000000009, 998244353),
         BigInt("100000000000000"), 8},
        {WeightVector(123456791, 987654323, 555555559),
         BigInt("77777777777777"), 0},
        {WeightVector(2310, 1365, 595), 123456789, 0},
        {WeightVector(BigInt("999999999989"), BigInt("999999999961"),
                      BigInt("999999999877")),
         BigInt("10000000000000"), 0},
    };
    for (const Case& c : cases) {
        BigInt swept = sweep_count(c.w, c.d);
        CHECK(swept == c.expected);
        CHECK(count(c.w, c.d) == swept);
    }
}

TEST_CASE("astronomical degrees extrapolate exactly") {
    // chi(d0 + N*bar) = chi(d0) + N*d0 + bar*N(N-1)/2 + N(bar+|w|)/2,
    // telescoping the quasi-period step; pins big-number behavior
    WeightVector w(19, 77, 12);
    BigInt bar = w.bar();
    BigInt d("99999999999999999999999999999999999999");
    BigInt d0 = d % bar;
    BigInt n = d / bar;
    BigInt base = count(w, d0);
    BigInt extrapolated =
        base + n * d0 + bar * (n * (n - 1)) / 2 + n * (bar + w.abs()) / 2;
    CHECK(count(w, d) == extrapolated);
    CHECK(count(w, d) ==
          BigInt("2848029163818637502848029163818637505866940077466393255"
                 "86694007746639325"));
}
