// hj.hpp - Hirzebruch-Jung continued fractions and the resolution data of
// X(d;1,q): intersection matrix, relative canonical divisor, delta^top form,
// log-canonical threshold, Gorenstein index and the two Blache bounds.
#ifndef WPTRI_HJ_HPP
#define WPTRI_HJ_HPP

#include <cstddef>
#include <vector>

#include "wptri/exact.hpp"

namespace wptri {

// Expansion of d/q by excess: q_0 = d, q_1 = q, q_{i+1} = c_i q_i - q_{i-1}
// with c_i = ceil(q_{i-1}/q_i), ending at q_n = 1, q_{n+1} = 0. The qbar
// sequence runs the same recurrence upward from qbar_0 = 0, qbar_1 = 1.
// Cross identity: q_i qbar_{i+1} - q_{i+1} qbar_i = d.
struct HJData {
    BigInt d;
    std::vector<BigInt> c;    // c_1..c_n, every entry >= 2
    std::vector<BigInt> q;    // q_1..q_n, strictly decreasing to 1
    std::vector<BigInt> qbar; // qbar_1..qbar_n

    std::size_t length() const { return c.size(); }
};

/// Requires d >= 2, 1 <= q < d, gcd(d,q) = 1; throws InvalidTypeError.
HJData hj_expand(const BigInt& d, const BigInt& q);

/// n x n tridiagonal matrix with diagonal -c_i and off-diagonal 1: the
/// intersection matrix of the exceptional curves of the minimal resolution.
std::vector<std::vector<BigInt>> intersection_matrix(const HJData& h);

/// Multiplicities (q_i + qbar_i)/d - 1 of the relative canonical divisor;
/// each lies in (-1, 0].
std::vector<Rational> relative_canonical(const HJData& h);

/// Log-canonical threshold w.r.t. the maximal ideal:
/// min_i (q_i + qbar_i)/d, always >= 2/d.
Rational lct(const BigInt& d, const BigInt& q);

/// -1/2 * eD^T M (eD - kappa) where M is the intersection matrix and kappa
/// the relative canonical multiplicities. eD holds the exceptional
/// multiplicities of the divisor; must have length n.
Rational delta_top(const HJData& h, const std::vector<Rational>& e_d);

/// Smallest m with m*K Cartier: d / gcd(d, q+1).
BigInt gorenstein_index(const BigInt& d, const BigInt& q);

/// Local degree class of ell*K on X(d;1,q): ell * (d-1-q) mod d.
BigInt canonical_multiple_degree(const BigInt& d, const BigInt& q,
                                 const BigInt& ell);

struct BlacheBoundEntry {
    BigInt ell;
    Rational r;      // R(ell*K), signed
    Rational bound;  // (ell-1)(I-ell)/I
    bool holds;      // |r| <= bound
};

struct BlacheBoundReport {
    BigInt index; // Gorenstein index I
    std::vector<BlacheBoundEntry> entries; // ell = 2..I-1 (may be empty)
    bool holds;
};

BlacheBoundReport blache_bound_report(const BigInt& d, const BigInt& q);

struct BlacheDiffEntry {
    BigInt ell;
    Rational diff; // |R((ell+1)K) - R(ell K)|
    bool attains_bound;
};

struct BlacheDiffReport {
    Rational bound; // 1 - lct
    std::vector<BlacheDiffEntry> entries; // ell = 1..d-1
    Rational max_diff;
    bool holds;
};

BlacheDiffReport blache_diff_report(const BigInt& d, const BigInt& q);

} // namespace wptri

#endif
