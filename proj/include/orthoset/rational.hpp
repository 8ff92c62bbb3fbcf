#ifndef ORTHOSET_RATIONAL_HPP
#define ORTHOSET_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace orthoset {

// Exact rational arithmetic everywhere a measure or threshold is compared;
// no floating point is allowed on those paths.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b" or "a". Throws on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& r);

// r^e for integer e (e may be negative; r must be nonzero then).
Rat pow_rat(const Rat& r, long e);

// Exact binomial coefficient.
Int binomial(unsigned long n, unsigned long k);

// floor(x^{1/k}) for x >= 0, k >= 1.
Int floor_kth_root(const Int& x, unsigned long k);

// log2 of a positive integer, via mantissa/exponent split (no overflow).
double log2_of(const Int& x);

}  // namespace orthoset

#endif
