#include "wptri/unity.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace wptri {

namespace {

constexpr std::int64_t kMaxOrder = 10'000'000;

// Kahan-compensated complex accumulator; the summands nearly cancel for
// large orders, so naive summation loses digits.
struct CompensatedSum {
    std::complex<double> total{0.0, 0.0};
    std::complex<double> carry{0.0, 0.0};

    void add(std::complex<double> v) {
        std::complex<double> y = v - carry;
        std::complex<double> t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

std::int64_t small_order(const BigInt& d, const char* who) {
    if (!d.fits_slong_p() || d > kMaxOrder)
        throw TooLargeError(std::string(who) + ": order too large for the "
                            "floating-point path");
    return d.get_si();
}

// z^(i*e mod d) generated from the angle directly, never by repeated
// multiplication
std::complex<double> root_pow(std::int64_t residue, std::int64_t d) {
    double angle = 2.0 * std::numbers::pi * (double)residue / (double)d;
    return {std::cos(angle), std::sin(angle)};
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

double r_via_roots(const BigInt& d, const BigInt& a, const BigInt& b,
                   const BigInt& k) {
    if (d < 2) throw InvalidTypeError("r_via_roots: order must be >= 2");
    if (gcd(a, d) != 1 || gcd(b, d) != 1)
        throw InvalidTypeError("r_via_roots: weights must be units mod d");
    std::int64_t dd = small_order(d, "r_via_roots");
    std::int64_t ra = canonical_residue(a, d).get_si();
    std::int64_t rb = canonical_residue(b, d).get_si();
    std::int64_t rk = canonical_residue(k, d).get_si();
    CompensatedSum sum;
    for (std::int64_t i = 1; i < dd; ++i) {
        std::complex<double> num =
            1.0 - root_pow((dd - (i * rk) % dd) % dd, dd);
        std::complex<double> den = (1.0 - root_pow((i * ra) % dd, dd)) *
                                   (1.0 - root_pow((i * rb) % dd, dd));
        sum.add(num / den);
    }
    std::complex<double> value = -sum.total / (double)dd;
    if (std::fabs(value.imag()) >= 1e-9 * (double)dd)
        throw NumericError("r_via_roots: imaginary residue " +
                           std::to_string(value.imag()));
    return value.real();
}

double unity_sum_identity(const BigInt& q) {
    if (q < 2) throw InvalidTypeError("unity_sum_identity: q must be >= 2");
    std::int64_t qq = small_order(q, "unity_sum_identity");
    CompensatedSum sum;
    for (std::int64_t i = 1; i < qq; ++i)
        sum.add(1.0 / (1.0 - root_pow(i, qq)));
    return sum.total.real();
}

} // namespace wptri
