#include "wptri/hj.hpp"

#include "wptri/correction.hpp"

namespace wptri {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

void check_dq(const BigInt& d, const BigInt& q, const char* who) {
    if (d < 2) throw InvalidTypeError(std::string(who) + ": order must be >= 2");
    if (q < 1 || q >= d)
        throw InvalidTypeError(std::string(who) + ": q must satisfy 1 <= q < d");
    if (gcd(d, q) != 1)
        throw InvalidTypeError(std::string(who) + ": gcd(d,q) != 1");
}

} // namespace

HJData hj_expand(const BigInt& d, const BigInt& q) {
    check_dq(d, q, "hj_expand");
    // the by-excess expansion has length up to d - 1 (q = d - 1 gives a
    // bamboo of that many (-2)-curves), so cap the materialized size
    constexpr std::size_t kMaxLength = 10'000'000;
    HJData h;
    h.d = d;
    BigInt prev = d, cur = q;
    while (cur >= 1) {
        if (h.c.size() >= kMaxLength)
            throw TooLargeError("hj_expand: resolution has more than " +
                                std::to_string(kMaxLength) +
                                " exceptional curves");
        BigInt c;
        mpz_cdiv_q(c.get_mpz_t(), prev.get_mpz_t(), cur.get_mpz_t());
        h.c.push_back(c);
        h.q.push_back(cur);
        BigInt next = c * cur - prev;
        prev = cur;
        cur = next;
    }
    // prev == 1 here, since gcd(d,q) = 1 drives the remainders down to 1, 0
    h.qbar.resize(h.q.size());
    BigInt qb_prev = 0, qb_cur = 1;
    for (std::size_t i = 0; i < h.q.size(); ++i) {
        h.qbar[i] = qb_cur;
        BigInt next = h.c[i] * qb_cur - qb_prev;
        qb_prev = qb_cur;
        qb_cur = next;
    }
    return h;
}

std::vector<std::vector<BigInt>> intersection_matrix(const HJData& h) {
    std::size_t n = h.length();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = -h.c[i];
        if (i + 1 < n) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    return m;
}

std::vector<Rational> relative_canonical(const HJData& h) {
    std::vector<Rational> kappa;
    kappa.reserve(h.length());
    for (std::size_t i = 0; i < h.length(); ++i)
        kappa.push_back(Rational(h.q[i] + h.qbar[i] - h.d, h.d));
    return kappa;
}

Rational lct(const BigInt& d, const BigInt& q) {
    HJData h = hj_expand(d, q);
    Rational best(h.q[0] + h.qbar[0], h.d);
    for (std::size_t i = 1; i < h.length(); ++i) {
        Rational cand(h.q[i] + h.qbar[i], h.d);
        if (cand < best) best = cand;
    }
    return best;
}

Rational delta_top(const HJData& h, const std::vector<Rational>& e_d) {
    std::size_t n = h.length();
    if (e_d.size() != n)
        throw DimensionError("delta_top: expected " + std::to_string(n) +
                             " multiplicities, got " +
                             std::to_string(e_d.size()));
    std::vector<Rational> kappa = relative_canonical(h);
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e_d[i] - kappa[i];
    // y = M x for the tridiagonal intersection matrix
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
        Rational y = Rational(BigInt(-h.c[i])) * x[i];
        if (i > 0) y += x[i - 1];
        if (i + 1 < n) y += x[i + 1];
        total += e_d[i] * y;
    }
    return Rational(-1, 2) * total;
}

BigInt gorenstein_index(const BigInt& d, const BigInt& q) {
    check_dq(d, q, "gorenstein_index");
    return d / gcd(d, q + 1);
}

BigInt canonical_multiple_degree(const BigInt& d, const BigInt& q,
                                 const BigInt& ell) {
    check_dq(d, q, "canonical_multiple_degree");
    // deg K = -(1+q) mod d on X(d;1,q)
    return canonical_residue(ell * (d - 1 - q), d);
}

BlacheBoundReport blache_bound_report(const BigInt& d, const BigInt& q) {
    BlacheBoundReport report;
    report.index = gorenstein_index(d, q);
    report.holds = true;
    for (BigInt ell = 2; ell < report.index; ++ell) {
        Rational r = correction_r_1q(d, q, canonical_multiple_degree(d, q, ell));
        Rational bound((ell - 1) * (report.index - ell), report.index);
        bool ok = abs(r) <= bound;
        report.holds = report.holds && ok;
        report.entries.push_back({ell, r, bound, ok});
    }
    return report;
}

BlacheDiffReport blache_diff_report(const BigInt& d, const BigInt& q) {
    check_dq(d, q, "blache_diff_report");
    BlacheDiffReport report;
    report.bound = Rational(1) - lct(d, q);
    report.holds = true;
    report.max_diff = Rational(0);
    Rational prev = correction_r_1q(d, q, canonical_multiple_degree(d, q, 1));
    for (BigInt ell = 1; ell < d; ++ell) {
        Rational next =
            correction_r_1q(d, q, canonical_multiple_degree(d, q, ell + 1));
        Rational diff = abs(next - prev);
        if (diff > report.max_diff) report.max_diff = diff;
        bool attained = diff == report.bound;
        report.holds = report.holds && diff <= report.bound;
        report.entries.push_back({ell, diff, attained});
        prev = next;
    }
    return report;
}

} // namespace wptri
