#include "wptri/exact.hpp"

#include <ostream>

namespace wptri {

GcdExt gcd_ext(const BigInt& a, const BigInt& b) {
    GcdExt r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 1) throw InvalidTypeError("mod_inverse: modulus must be >= 1");
    if (m == 1) return 0;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotCoprimeError("mod_inverse: gcd(" + a.get_str() + ", " +
                              m.get_str() + ") != 1");
    return inv; // mpz_invert already yields the residue in [0,m)
}

BigInt canonical_residue(const BigInt& k, const BigInt& m) {
    if (m < 1) throw InvalidTypeError("canonical_residue: modulus must be >= 1");
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational frac_part(const Rational& x) {
    return x - Rational(x.floor());
}

Rational abs(const Rational& x) {
    return x < Rational(0) ? -x : x;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

} // namespace wptri
