// exact.hpp - arbitrary-precision integers, canonical rationals and the
// modular/Euclidean primitives the rest of the library is built on.
#ifndef WPTRI_EXACT_HPP
#define WPTRI_EXACT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "wptri/errors.hpp"

namespace wptri {

// Unbounded signed integer. GMP does the heavy lifting; everything in this
// library that is not explicitly a float goes through this type.
using BigInt = mpz_class;

struct GcdExt {
    BigInt g; // gcd(|a|,|b|) >= 0, with gcd(0,0) = 0
    BigInt x;
    BigInt y; // a*x + b*y = g
};

/// Extended Euclidean algorithm: g = gcd(|a|,|b|) and a Bezout pair (x,y).
GcdExt gcd_ext(const BigInt& a, const BigInt& b);

/// Inverse of a modulo m, as the residue in [0,m). m = 1 yields 0.
/// Throws NotCoprimeError when gcd(a,m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Mathematical residue of k modulo m >= 1: the unique value in [0,m)
/// congruent to k, also for negative k (e.g. -8 mod 19 = 11).
BigInt canonical_residue(const BigInt& k, const BigInt& m);

// Exact rational number, always kept in canonical form:
// den > 0, gcd(|num|, den) = 1. Equality is structural.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(int n) : value_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw InvalidTypeError("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return value_ == 0; }

    /// Largest integer <= *this.
    BigInt floor() const {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(),
                   value_.get_den().get_mpz_t());
        return q;
    }

    /// "num/den", or just "num" when the value is an integer.
    std::string str() const;

    double to_double() const { return value_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.value_ == 0) throw InvalidTypeError("Rational: division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_; // mpq arithmetic preserves canonical form
};

/// Fractional part of x, in [0,1): x - floor(x).
Rational frac_part(const Rational& x);

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace wptri

#endif
