#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "totpos/errors.hpp"

namespace totpos {

// Arbitrary-precision rational scalar. GMP keeps values canonical
// (gcd-reduced, positive denominator), which is exactly the invariant
// the library relies on for exact equality of entries.
using rational = mpq_class;
using bigint = mpz_class;

inline int sign(const rational& q) { return sgn(q); }
inline int sign(const bigint& z) { return sgn(z); }

// Parses "p", "-p", or "p/q" with q > 0 after normalization. Rejects q = 0.
inline rational parse_rational(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw input_error("unparsable rational literal: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw input_error("rational with zero denominator: '" + text + "'");
    }
    rational q(raw);
    mpq_clear(raw);
    q.canonicalize();
    return q;
}

inline std::string to_string(const rational& q) { return q.get_str(); }
inline std::string to_string(const bigint& z) { return z.get_str(); }

// q^e for integer e (negative allowed when q != 0).
inline rational pow_rational(const rational& q, long e) {
    if (e == 0) return rational(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    bigint num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), k);
    if (inv) {
        if (sgn(num) == 0) throw input_error("zero base raised to a negative power");
        std::swap(num, den);
    }
    rational r(num, den);
    r.canonicalize();
    return r;
}

// Least common multiple of the denominators of a range of rationals.
inline bigint common_denominator(const std::vector<rational>& values) {
    bigint l = 1;
    for (const rational& v : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return l;
}

} // namespace totpos
