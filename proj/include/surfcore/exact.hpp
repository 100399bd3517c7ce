#pragma once

#include <gmpxx.h>

#include <string>

namespace surfcore {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(const std::string& text);

inline bool is_integral(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_den() == 1;
}

}  // namespace surfcore
