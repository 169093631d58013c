#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kan {

using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced to lowest terms with positive denominator. Throws on den == 0.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "p", "-p", "p/q" (any sign placement on p; q must be a nonzero integer).
Rat parse_rat(std::string_view text);

// "p" or "p/q", canonical form.
std::string rat_to_string(const Rat& r);

inline Int numerator(const Rat& r) { return r.get_num(); }
inline Int denominator(const Rat& r) { return r.get_den(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Exact n-th power for rationals/integers (n >= 0).
Rat rat_pow(const Rat& base, unsigned long n);
Int int_pow(const Int& base, unsigned long n);

// Floor/ceil of n/d as exact integers.
Int floor_div(const Int& n, const Int& d);
Int ceil_div(const Int& n, const Int& d);

// gcd/binomial conveniences over mpz.
Int int_gcd(const Int& a, const Int& b);
Int binomial(unsigned long n, unsigned long k);

}  // namespace kan
