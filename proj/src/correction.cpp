#include "wptri/correction.hpp"

namespace wptri {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

CyclicQuotient::CyclicQuotient(const BigInt& order, const BigInt& wa,
                               const BigInt& wb)
    : d(order) {
    if (d < 1) throw InvalidTypeError("CyclicQuotient: order must be >= 1");
    a = canonical_residue(wa, d);
    b = canonical_residue(wb, d);
    if (gcd(a, d) != 1 || gcd(b, d) != 1)
        throw InvalidTypeError("CyclicQuotient: weights of X(" + d.get_str() +
                               ";" + wa.get_str() + "," + wb.get_str() +
                               ") are not units mod the order");
}

NormalizedType normalize_type(const CyclicQuotient& x, const BigInt& k) {
    if (x.d == 1) return {1, 0, 0};
    BigInt ainv = mod_inverse(x.a, x.d);
    return {x.d, canonical_residue(ainv * x.b, x.d),
            canonical_residue(ainv * k, x.d)};
}

CorrectionChain correction_chain(const BigInt& d, const BigInt& q,
                                 const BigInt& k) {
    if (d < 1) throw InvalidTypeError("correction: order must be >= 1");
    CorrectionChain chain;
    if (d == 1) return chain;
    BigInt cur_d = d;
    BigInt cur_q = canonical_residue(q, d);
    if (gcd(cur_d, cur_q) != 1)
        throw InvalidTypeError("correction: gcd(" + d.get_str() + ", " +
                               q.get_str() + ") != 1");
    BigInt cur_k = canonical_residue(k, d);
    int sign = -1;
    while (cur_d > 1) {
        // cur_q >= 1 here: gcd(cur_d, cur_q) = 1 rules out cur_q = 0.
        Rational term = frac_part(Rational(cur_k, cur_q)) +
                        Rational(cur_k * (cur_k + 1 + cur_q - cur_d),
                                 2 * cur_d * cur_q);
        Rational contribution = sign < 0 ? -term : term;
        chain.value += contribution;
        chain.steps.push_back({cur_d, cur_q, cur_k, term, contribution});
        BigInt next_q = canonical_residue(cur_d, cur_q);
        cur_k = canonical_residue(cur_k, cur_q);
        cur_d = cur_q;
        cur_q = next_q;
        sign = -sign;
    }
    return chain;
}

Rational correction_r_1q(const BigInt& d, const BigInt& q, const BigInt& k) {
    return correction_chain(d, q, k).value;
}

Rational correction_r(const CyclicQuotient& x, const BigInt& k) {
    NormalizedType n = normalize_type(x, k);
    return correction_r_1q(n.d, n.q, n.k);
}

Rational correction_r_global(const WeightVector& w, const BigInt& d) {
    if (!w.pairwise_coprime())
        throw NotCoprimeError("correction_r_global: weights must be pairwise "
                              "coprime");
    Rational total;
    const BigInt* ws[3] = {&w.w0, &w.w1, &w.w2};
    for (int i = 0; i < 3; ++i) {
        const BigInt& order = *ws[i];
        if (order == 1) continue; // smooth chart
        // the other two weights, in index order: R is symmetric in them
        const BigInt& a = *ws[i == 0 ? 1 : 0];
        const BigInt& b = *ws[i == 2 ? 1 : 2];
        total += correction_r(CyclicQuotient(order, a, b), d);
    }
    return total;
}

BigInt a_count(const BigInt& p, const BigInt& q, const BigInt& r) {
    if (p < 1 || q < 1) throw InvalidTypeError("a_count: p, q must be >= 1");
    if (r < 0) throw InvalidTypeError("a_count: r must be >= 0");
    BigInt budget = q * r;
    BigInt total = 0;
    if (p >= q) {
        // count pairs by rows of i; at most qr/p of them
        for (BigInt i = 1; p * i + q <= budget; ++i)
            total += (budget - p * i) / q;
    } else {
        for (BigInt j = 1; q * j + p <= budget; ++j)
            total += (budget - q * j) / p;
    }
    return total;
}

Rational delta_comb(const BigInt& p, const BigInt& q, const BigInt& r) {
    if (p < 1 || q < 1) throw InvalidTypeError("delta_comb: p, q must be >= 1");
    if (r < 0) throw InvalidTypeError("delta_comb: r must be >= 0");
    return Rational(r * (q * r - p - q + 1), 2 * p);
}

Rational delta_invariant(const CyclicQuotient& x, const BigInt& k) {
    if (x.d == 1) return Rational(0);
    BigInt ainv = mod_inverse(x.a, x.d);
    BigInt q = canonical_residue(-(ainv * x.b), x.d);
    BigInt kk = canonical_residue(-(ainv * k), x.d);
    BigInt r = canonical_residue(mod_inverse(q, x.d) * kk, x.d);
    return Rational(a_count(x.d, q, r)) - delta_comb(x.d, q, r);
}

} // namespace wptri
