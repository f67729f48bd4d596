#include "wptri/weights.hpp"

namespace wptri {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

BigInt WeightVector::total_gcd() const {
    return gcd(gcd(w0, w1), w2);
}

bool WeightVector::pairwise_coprime() const {
    return gcd(w0, w1) == 1 && gcd(w0, w2) == 1 && gcd(w1, w2) == 1;
}

PairwiseGcds pairwise_gcds(const WeightVector& w) {
    return {gcd(w.w0, w.w1), gcd(w.w0, w.w2), gcd(w.w1, w.w2)};
}

std::array<BigInt, 3> residues_r(const WeightVector& w, const BigInt& d) {
    if (d < 0) throw InvalidTypeError("residues_r: degree must be >= 0");
    if (w.total_gcd() != 1)
        throw NotCoprimeError("residues_r: gcd(w0,w1,w2) != 1");
    PairwiseGcds g = pairwise_gcds(w);
    // r_k lives mod the gcd of the *other two* weights; those both vanish
    // there, so d = w_k * a_k mod w_ij pins a_k mod w_ij.
    auto residue = [&d](const BigInt& wk, const BigInt& wij) -> BigInt {
        if (wij == 1) return 0;
        return canonical_residue(mod_inverse(wk, wij) * d, wij);
    };
    return {residue(w.w0, g.w12), residue(w.w1, g.w02), residue(w.w2, g.w01)};
}

ReductionData reduce(const WeightVector& w, const BigInt& d) {
    auto r = residues_r(w, d); // validates total gcd and d >= 0
    PairwiseGcds g = pairwise_gcds(w);
    WeightVector v(w.w0 / (g.w01 * g.w02), w.w1 / (g.w01 * g.w12),
                   w.w2 / (g.w02 * g.w12));
    BigInt prod = g.w01 * g.w02 * g.w12;
    BigInt num = d - (w.w0 * r[0] + w.w1 * r[1] + w.w2 * r[2]);
    // Divisibility holds for every input, not just solvable ones: num
    // vanishes mod each w_ij by construction and the w_ij are pairwise
    // coprime.
    if (num % prod != 0)
        throw InternalError("reduce: residue construction violated "
                            "divisibility");
    return ReductionData{g, v, r[0], r[1], r[2], num / prod};
}

} // namespace wptri
