#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace piforms::exactnum {

// Arbitrary-precision integers and canonical rationals. mpq_class keeps
// gcd(|num|, den) = 1 and den > 0 after every arithmetic operation; raw
// construction from a numerator/denominator pair goes through rat() so the
// canonical invariant holds from the start.
using Int = mpz_class;
using Rat = mpq_class;

class zero_division_error : public std::domain_error {
public:
    explicit zero_division_error(const std::string& what)
        : std::domain_error(what) {}
};

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw zero_division_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Guarded division; mpq_class::operator/ on a zero divisor is undefined.
inline Rat checked_div(const Rat& x, const Rat& y) {
    if (y == 0) throw zero_division_error("division by zero rational");
    return x / y;
}

inline Int pow10(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10u, e);
    return r;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for integer e (negative exponents allowed, base != 0 then).
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    unsigned long a = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rat r(ipow(base.get_num(), a), ipow(base.get_den(), a));
    r.canonicalize();
    if (e < 0) return checked_div(Rat(1), r);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline Rat abs(const Rat& x) { return sgn(x) < 0 ? Rat(-x) : x; }

}  // namespace piforms::exactnum
