// unity.hpp - floating-point evaluation of the roots-of-unity formulas, used
// as an independent numeric cross-check of the exact engine.
#ifndef WPTRI_UNITY_HPP
#define WPTRI_UNITY_HPP

#include "wptri/exact.hpp"

namespace wptri {

/// -(1/d) * sum_{i=1}^{d-1} (1 - z^{-ik}) / ((1 - z^{ia})(1 - z^{ib})) with
/// z = exp(2*pi*I/d), evaluated in compensated double arithmetic. Requires
/// gcd(a,d) = gcd(b,d) = 1 and d >= 2. Throws NumericError if the imaginary
/// residue exceeds 1e-9 * d.
double r_via_roots(const BigInt& d, const BigInt& a, const BigInt& b,
                   const BigInt& k);

/// Real part of sum_{i=1}^{q-1} 1/(1 - z^i); equals (q-1)/2.
double unity_sum_identity(const BigInt& q);

} // namespace wptri

#endif
