#include "wptri/ehrhart.hpp"

#include <algorithm>
#include <cstdint>

namespace wptri {

namespace {

constexpr std::int64_t kBruteforceIterationCap = 10'000'000;
constexpr std::int64_t kSeriesDegreeCap = 10'000'000;

struct Int64Triangle {
    std::int64_t w[3];
    std::int64_t d;
};

// Brute force works on int64; weights/degrees beyond that blow the iteration
// cap regardless, so rejecting them is not a loss of coverage.
Int64Triangle checked_small(const WeightVector& w, const BigInt& d,
                            const char* who) {
    if (d < 0) throw InvalidTypeError(std::string(who) + ": degree must be >= 0");
    if (!w.w0.fits_slong_p() || !w.w1.fits_slong_p() || !w.w2.fits_slong_p() ||
        !d.fits_slong_p())
        throw TooLargeError(std::string(who) + ": inputs exceed the oracle range");
    Int64Triangle t{{w.w0.get_si(), w.w1.get_si(), w.w2.get_si()}, d.get_si()};
    // iterate over the two largest weights; the smallest determines the
    // third coordinate
    std::sort(t.w, t.w + 3);
    std::swap(t.w[0], t.w[2]); // t.w = {largest, middle, smallest}
    unsigned __int128 iters =
        (unsigned __int128)(t.d / t.w[0] + 1) * (unsigned __int128)(t.d / t.w[1] + 1);
    if (iters > (unsigned __int128)kBruteforceIterationCap)
        throw TooLargeError(std::string(who) + ": ~" +
                            std::to_string((double)iters) +
                            " iterations exceed the guard");
    return t;
}

} // namespace

Rational quadratic_term(const WeightVector& w, const BigInt& d) {
    return Rational(d * (d + w.abs()), 2 * w.bar());
}

Rational euler_characteristic(const WeightVector& w, const BigInt& d) {
    Rational chi = Rational(1) + quadratic_term(w, d) + correction_r_global(w, d);
    if (!chi.is_integer())
        throw InternalError("euler_characteristic(" + w.w0.get_str() + "," +
                            w.w1.get_str() + "," + w.w2.get_str() + "; " +
                            d.get_str() + ") = " + chi.str() +
                            " is not an integer");
    return chi;
}

BigInt count(const WeightVector& w, const BigInt& d) {
    if (d < 0) return 0;
    BigInt g = w.total_gcd();
    WeightVector wn = w;
    BigInt dn = d;
    if (g > 1) {
        if (dn % g != 0) return 0;
        wn = WeightVector(w.w0 / g, w.w1 / g, w.w2 / g);
        dn /= g;
    }
    ReductionData red = reduce(wn, dn);
    if (red.e < 0) return 0;
    return euler_characteristic(red.v, red.e).num();
}

Rational virtual_genus(const WeightVector& w, const BigInt& d) {
    return Rational(1) + Rational(d * (d - w.abs()), 2 * w.bar());
}

Rational intersection_number(const WeightVector& w, const BigInt& d1,
                             const BigInt& d2) {
    return Rational(d1 * d2, w.bar());
}

BigInt count_bruteforce(const WeightVector& w, const BigInt& d) {
    Int64Triangle t = checked_small(w, d, "count_bruteforce");
    std::int64_t n = 0;
    for (std::int64_t i = 0; t.w[0] * i <= t.d; ++i) {
        std::int64_t rem_i = t.d - t.w[0] * i;
        for (std::int64_t j = 0; t.w[1] * j <= rem_i; ++j) {
            if ((rem_i - t.w[1] * j) % t.w[2] == 0) ++n;
        }
    }
    return n;
}

std::vector<std::array<BigInt, 3>> bruteforce_triples(const WeightVector& w,
                                                      const BigInt& d) {
    if (d < 0) throw InvalidTypeError("bruteforce_triples: degree must be >= 0");
    // this loop keeps the original coordinate order (the output must be
    // lex-sorted), so guard on w0, w1 rather than the two largest weights
    BigInt iters = (d / w.w0 + 1) * (d / w.w1 + 1);
    if (iters > kBruteforceIterationCap)
        throw TooLargeError("bruteforce_triples: iteration guard exceeded");
    std::vector<std::array<BigInt, 3>> out;
    for (BigInt i = 0; w.w0 * i <= d; ++i) {
        BigInt rem_i = d - w.w0 * i;
        for (BigInt j = 0; w.w1 * j <= rem_i; ++j) {
            BigInt rem_j = rem_i - w.w1 * j;
            if (rem_j % w.w2 == 0) out.push_back({i, j, rem_j / w.w2});
        }
    }
    return out;
}

BigInt count_series(const WeightVector& w, const BigInt& d) {
    if (d < 0) throw InvalidTypeError("count_series: degree must be >= 0");
    if (d > kSeriesDegreeCap)
        throw TooLargeError("count_series: degree exceeds the DP guard");
    std::size_t dd = (std::size_t)d.get_ui();
    std::vector<std::uint64_t> ways(dd + 1, 0);
    ways[0] = 1;
    for (const BigInt* wk : {&w.w0, &w.w1, &w.w2}) {
        if (*wk > d) continue;
        std::size_t c = (std::size_t)wk->get_ui();
        for (std::size_t t = c; t <= dd; ++t) ways[t] += ways[t - c];
    }
    return BigInt((unsigned long)ways[dd]);
}

Rational pick_area(const BigInt& interior, const BigInt& boundary) {
    if (interior < 0 || boundary < 0)
        throw InvalidTypeError("pick_area: counts must be >= 0");
    return Rational(2 * interior + boundary - 2, 2);
}

} // namespace wptri
