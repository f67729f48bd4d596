// correction.hpp - local correction terms of cyclic quotient singularities:
// the Euclidean recursion for R, and the lattice-count Delta-invariant that
// independently computes the same quantity.
#ifndef WPTRI_CORRECTION_HPP
#define WPTRI_CORRECTION_HPP

#include <vector>

#include "wptri/exact.hpp"
#include "wptri/weights.hpp"

namespace wptri {

// The cyclic quotient X(d;a,b): C^2 divided by the order-d cyclic group
// acting with weights (a,b). Weights are stored as canonical residues mod d
// and must be units; d = 1 is the smooth point.
struct CyclicQuotient {
    BigInt d, a, b;

    CyclicQuotient(const BigInt& order, const BigInt& wa, const BigInt& wb);
};

struct NormalizedType {
    BigInt d; // order
    BigInt q; // a^{-1} b mod d, so the type is (d; 1, q)
    BigInt k; // a^{-1} k mod d
};

/// Rewrites R_{X(d;a,b)}(k) as R_{X(d;1,q)}(k'); for d = 1 returns (1,0,0).
NormalizedType normalize_type(const CyclicQuotient& x, const BigInt& k);

// One application of the descent rule
//   R_{(d;1,q)}(k) = -R_{(q;1,d mod q)}(k mod q) - {k/q} - k(k+1+q-d)/(2dq).
struct RecursionStep {
    BigInt d, q, k;       // state the rule was applied to (0 <= k < d)
    Rational term;        // {k/q} + k(k+1+q-d)/(2dq)
    Rational contribution; // signed value this step adds to the total
};

struct CorrectionChain {
    std::vector<RecursionStep> steps; // one entry per Euclidean division
    Rational value;                   // R_{(d;1,q)}(k)
};

/// Runs the descent until the order reaches 1. Throws InvalidTypeError when
/// gcd(d, q) != 1 (after reducing q mod d); d = 1 yields an empty chain.
CorrectionChain correction_chain(const BigInt& d, const BigInt& q,
                                 const BigInt& k);

/// R_{X(d;1,q)}(k).
Rational correction_r_1q(const BigInt& d, const BigInt& q, const BigInt& k);

/// R_{X(d;a,b)}(k) for a general type, via normalize_type.
Rational correction_r(const CyclicQuotient& x, const BigInt& k);

/// Sum of the three local terms R_{(w_i; w_j, w_k)}(d) over the (at most
/// three) singular points; weights equal to 1 contribute 0.
/// Throws NotCoprimeError when w is not pairwise coprime.
Rational correction_r_global(const WeightVector& w, const BigInt& d);

/// #{(i,j) >= 1 : p*i + q*j <= q*r}, by direct enumeration over the variable
/// with the larger coefficient. Oracle-grade: O(min(qr/p, r)) loop steps.
BigInt a_count(const BigInt& p, const BigInt& q, const BigInt& r);

/// r(qr - p - q + 1)/(2p): the count a_count would give if the triangle had
/// integral vertices; specializes to binomial(r,2) at p = q = 1.
Rational delta_comb(const BigInt& p, const BigInt& q, const BigInt& r);

/// Delta-invariant of X(d;a,b) at k: A^{(d,q)}_r - delta^{(d,q)}_r with
/// q = (-a^{-1} b mod d) and r = (q^{-1} a^{-1} (-k) mod d).
Rational delta_invariant(const CyclicQuotient& x, const BigInt& k);

} // namespace wptri

#endif
