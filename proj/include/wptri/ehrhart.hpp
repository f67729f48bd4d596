// ehrhart.hpp - the user-facing counting pipeline plus geometric quantities
// and the two slow counting oracles everything is validated against.
#ifndef WPTRI_EHRHART_HPP
#define WPTRI_EHRHART_HPP

#include <array>
#include <vector>

#include "wptri/correction.hpp"
#include "wptri/weights.hpp"

namespace wptri {

/// d(d+|w|)/(2 w-bar), the intersection-theoretic part of the count.
Rational quadratic_term(const WeightVector& w, const BigInt& d);

/// 1 + d(d+|w|)/(2 w-bar) + R_w(d). Defined for every integer d; always an
/// integer. Requires pairwise-coprime weights. Throws InternalError if the
/// assembled value is not an integer (that would be a bug, not bad input).
Rational euler_characteristic(const WeightVector& w, const BigInt& d);

/// Number of lattice points on the triangle w0*x + w1*y + w2*z = d,
/// x,y,z >= 0, for arbitrary positive weights. Total: returns 0 for d < 0,
/// for degrees the total gcd does not divide, and for empty triangles.
BigInt count(const WeightVector& w, const BigInt& d);

/// Virtual genus 1 + d(d-|w|)/(2 w-bar) of a degree-d curve.
Rational virtual_genus(const WeightVector& w, const BigInt& d);

/// Bezout in the weighted plane: d1*d2 / w-bar.
Rational intersection_number(const WeightVector& w, const BigInt& d1,
                             const BigInt& d2);

/// Defining oracle: enumerate solutions directly. Guarded; throws
/// TooLargeError beyond ~10^7 loop iterations.
BigInt count_bruteforce(const WeightVector& w, const BigInt& d);

/// All solutions (i,j,k), lexicographically sorted. Same guard as
/// count_bruteforce.
std::vector<std::array<BigInt, 3>> bruteforce_triples(const WeightVector& w,
                                                      const BigInt& d);

/// Second oracle: coefficient of t^d in 1/((1-t^w0)(1-t^w1)(1-t^w2)) by
/// coin-counting DP. Guarded; throws TooLargeError for d > 10^7.
BigInt count_series(const WeightVector& w, const BigInt& d);

/// Pick's formula i + b/2 - 1.
Rational pick_area(const BigInt& interior, const BigInt& boundary);

} // namespace wptri

#endif
