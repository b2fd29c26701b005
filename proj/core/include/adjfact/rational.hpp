#ifndef ADJFACT_RATIONAL_HPP
#define ADJFACT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "adjfact/errors.hpp"

namespace adjfact {

// Arbitrary-precision rational coefficients.  GMP's mpq_class keeps values
// canonical (reduced, positive denominator) as long as they are produced by
// its own arithmetic; anything built from raw numerator/denominator must be
// canonicalized explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "3", "-3", "1/2" — the coefficient syntax of the polynomial text grammar.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational rational_from_str(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("unparsable rational: " + s);
    if (q.get_den() == 0) throw InputError("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

} // namespace adjfact

#endif
