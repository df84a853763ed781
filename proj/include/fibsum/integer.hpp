#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fibsum {

// Arbitrary-precision signed integer. Every index, modulus and value in the
// library is one of these; machine words appear only where a precondition
// bounds the quantity to desk scale.
using Integer = mpz_class;

// Exact rational, canonical form (lowest terms, positive denominator).
using Rational = mpq_class;

// a mod m with the result normalized to [0, m). Requires m >= 1.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_long(const Integer& n) { return n.fits_slong_p(); }

// Narrowing conversion for desk-scale parameters.
inline long to_long(const Integer& n, const char* what = "argument") {
    if (!n.fits_slong_p())
        throw std::invalid_argument(std::string(what) + " out of machine range: " + n.get_str());
    return n.get_si();
}

inline Integer parse_integer(const std::string& text) {
    Integer n;
    if (n.set_str(text, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return n;
}

}  // namespace fibsum
