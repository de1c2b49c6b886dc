#ifndef MACJACK_RATIONAL_HPP
#define MACJACK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace macjack {

// Exact integers and rationals.  GMP does the heavy lifting; everything the
// library computes with these stays exact.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw arithmetic_error("expected an integer, got " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw arithmetic_error("integer out of range");
    return r.get_num().get_si();
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw arithmetic_error("0 raised to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Parses "a" or "a/b".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw arithmetic_error("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace macjack

#endif
