#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wptri/ehrhart.hpp"
#include "wptri/weights.hpp"

using namespace wptri;

TEST_CASE("weight vector basics") {
    WeightVector w(19, 77, 12);
    CHECK(w.abs() == 108);
    CHECK(w.bar() == 17556);
    CHECK(w.pairwise_coprime());
    CHECK(WeightVector(2, 2, 3).total_gcd() == 1);
    CHECK(WeightVector(4, 6, 10).total_gcd() == 2);
    CHECK_THROWS_AS(WeightVector(0, 1, 1), InvalidTypeError);
}

TEST_CASE("pairwise gcds") {
    PairwiseGcds g = pairwise_gcds(WeightVector(1235, 6545, 2652));
    CHECK(g.w01 == 5);
    CHECK(g.w02 == 13);
    CHECK(g.w12 == 17);

    g = pairwise_gcds(WeightVector(19, 77, 12));
    CHECK((g.w01 == 1 && g.w02 == 1 && g.w12 == 1));

    g = pairwise_gcds(WeightVector(2, 2, 3));
    CHECK((g.w01 == 2 && g.w02 == 1 && g.w12 == 1));
}

TEST_CASE("residues of the degree") {
    auto r = residues_r(WeightVector(1235, 6545, 2652), 1710721);
    CHECK(r[0] == 1);
    CHECK(r[1] == 2);
    CHECK(r[2] == 3);

    r = residues_r(WeightVector(19, 77, 12), 987654);
    CHECK((r[0] == 0 && r[1] == 0 && r[2] == 0));

    r = residues_r(WeightVector(2, 2, 3), 5);
    CHECK((r[0] == 0 && r[1] == 0 && r[2] == 1));

    CHECK_THROWS_AS(residues_r(WeightVector(2, 4, 6), 10), NotCoprimeError);
}

TEST_CASE("reduction of the worked non-coprime example") {
    ReductionData red = reduce(WeightVector(1235, 6545, 2652), 1710721);
    CHECK(red.v == WeightVector(19, 77, 12));
    CHECK(red.e == 1528);
    CHECK(red.r0 == 1);
    CHECK(red.r1 == 2);
    CHECK(red.r2 == 3);
}

TEST_CASE("reduction trivial and empty cases") {
    ReductionData red = reduce(WeightVector(19, 77, 12), 1528);
    CHECK(red.v == WeightVector(19, 77, 12));
    CHECK(red.e == 1528);
    CHECK((red.r0 == 0 && red.r1 == 0 && red.r2 == 0));

    red = reduce(WeightVector(2, 2, 3), 1);
    CHECK(red.e < 0);

    CHECK_THROWS_AS(reduce(WeightVector(2, 4, 6), 12), NotCoprimeError);
}

TEST_CASE("reduction invariants on random weights") {
    std::mt19937_64 rng(23);
    auto draw = [&rng](long lo, long hi) {
        return (long)(lo + (long)(rng() % (unsigned long)(hi - lo + 1)));
    };
    int done = 0;
    while (done < 400) {
        WeightVector w(draw(1, 30), draw(1, 30), draw(1, 30));
        if (w.total_gcd() != 1) continue;
        ++done;
        BigInt d = draw(0, 500);
        ReductionData red = reduce(w, d);
        BigInt prod = red.gcds.w01 * red.gcds.w02 * red.gcds.w12;
        CHECK(w.w0 * red.r0 + w.w1 * red.r1 + w.w2 * red.r2 + red.e * prod == d);
        CHECK(red.v.pairwise_coprime());
        CHECK(red.r0 < red.gcds.w12);
        CHECK(red.r1 < red.gcds.w02);
        CHECK(red.r2 < red.gcds.w01);
        if (red.e >= 0) {
            ReductionData again = reduce(red.v, red.e);
            CHECK(again.v == red.v);
            CHECK(again.e == red.e);
            CHECK((again.r0 == 0 && again.r1 == 0 && again.r2 == 0));
        }
        // the reduction is a bijection on lattice solutions
        CHECK(count_bruteforce(w, d) ==
              (red.e < 0 ? BigInt(0) : count_bruteforce(red.v, red.e)));
    }
}
