#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qma {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator), which the printing contract relies on.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// r^e for integer e; e < 0 requires r != 0.
inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (is_zero(r)) throw std::domain_error("rational_pow: 0 raised to a negative power");
        Rational inv(r.get_den(), r.get_num());
        inv.canonicalize();
        return rational_pow(inv, -e);
    }
    Rational base = r;
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Accepts "p" or "p/r" with an optional leading sign on p.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (sgn(r.get_den()) <= 0) throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qma
