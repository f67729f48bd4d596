// weights.hpp - weight vectors and the reduction of arbitrary weights to a
// pairwise-coprime triple with shifted degree.
#ifndef WPTRI_WEIGHTS_HPP
#define WPTRI_WEIGHTS_HPP

#include <array>

#include "wptri/exact.hpp"

namespace wptri {

struct WeightVector {
    BigInt w0, w1, w2;

    WeightVector(BigInt a, BigInt b, BigInt c)
        : w0(std::move(a)), w1(std::move(b)), w2(std::move(c)) {
        if (w0 < 1 || w1 < 1 || w2 < 1)
            throw InvalidTypeError("WeightVector: weights must be >= 1");
    }

    /// |w| = w0 + w1 + w2
    BigInt abs() const { return w0 + w1 + w2; }
    /// w-bar = w0 * w1 * w2
    BigInt bar() const { return w0 * w1 * w2; }

    BigInt total_gcd() const;
    bool pairwise_coprime() const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.w0 == b.w0 && a.w1 == b.w1 && a.w2 == b.w2;
    }
};

struct PairwiseGcds {
    BigInt w01, w02, w12;
};

PairwiseGcds pairwise_gcds(const WeightVector& w);

// Result of rewriting the counting problem for arbitrary weights as one for
// the pairwise-coprime triple v at degree e. Satisfies
//   w0*r0 + w1*r1 + w2*r2 + e*w01*w02*w12 = d
// with r_k in [0, w_ij). e < 0 means the original triangle has no lattice
// points.
struct ReductionData {
    PairwiseGcds gcds;
    WeightVector v;
    BigInt r0, r1, r2;
    BigInt e;
};

/// The residues (r0, r1, r2); r_k is determined by r_k = w_k^{-1} d mod w_ij,
/// which agrees with a_k mod w_ij for any lattice solution (a0,a1,a2).
/// Requires gcd(w0,w1,w2) = 1 and d >= 0; throws NotCoprimeError otherwise.
std::array<BigInt, 3> residues_r(const WeightVector& w, const BigInt& d);

/// Full reduction. Requires gcd(w0,w1,w2) = 1 and d >= 0.
ReductionData reduce(const WeightVector& w, const BigInt& d);

} // namespace wptri

#endif
